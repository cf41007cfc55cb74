class Choice {
    int m(int a) {
        int r = a > 0 ? 1 : 2;
        return r;
    }
}
