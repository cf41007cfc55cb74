class Straight {
    void m() {
        int x = 0;
    }
}
