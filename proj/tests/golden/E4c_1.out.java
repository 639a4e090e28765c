public class Point {
    private int a;

    int read() {
        return this.a;
    }
}
