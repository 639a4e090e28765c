public class Loops {
    private static final boolean TRACE = false;

    public int drain(int n) {
        int left = n;
        while (left > 0) {
            left--;
            if (TRACE) {
                System.out.println(left);
            }
        }
        final int limit = 3;
        if (limit > 2 && n > 0) {
            return 1;
        }
        return 0;
    }
}
