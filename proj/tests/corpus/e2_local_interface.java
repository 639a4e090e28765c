public class Pipeline {
    interface Step {
        int apply(int x);
    }

    public int run(int seed) {
        Step twice = new Step() {
            public int apply(int x) {
                int y = x * 2;
                return y;
            }
        };
        return twice.apply(seed);
    }
}
