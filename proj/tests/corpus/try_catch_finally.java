public class Retry {
    private int failures;

    public int attempt(Runnable r, int times) {
        int done = 0;
        for (int i = 0; i < times; i++) {
            try {
                r.run();
                done++;
            } catch (IllegalStateException | IllegalArgumentException e) {
                failures++;
            } finally {
                log(i);
            }
        }
        return done;
    }

    private void log(int i) {
        if (i > 10) {
            System.out.println(i);
        }
    }
}
