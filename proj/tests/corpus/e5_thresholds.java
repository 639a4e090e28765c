public class Thresholds {
    private static final int BASE = 10;

    public boolean high(int a) {
        return a > 8;
    }

    public int scale(int x) {
        return x * 12 + BASE;
    }

    public long big(long v) {
        return v + 3000000000L;
    }

    public int mask(int v) {
        return v - 0x1F;
    }

    public boolean tiny(int v) {
        return v < 2 || v == 0;
    }
}
