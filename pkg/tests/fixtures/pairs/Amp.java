class Amp {
    void m(int a, int b) {
        if (a > 0 && b > 0) {
            a = 1;
        }
        if (a > 2) {
            b = 2;
        }
    }
}
