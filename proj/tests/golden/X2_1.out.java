public class LocalConstant {
    private static final int c = 10;

    boolean check() {
        return c > 5;
    }
}
