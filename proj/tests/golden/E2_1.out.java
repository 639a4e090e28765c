public class Launcher {
    public void start(int n) {
        Runnable task = () -> {
            System.out.println(n);
        };
        task.run();
    }
}
