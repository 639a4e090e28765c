public class Greeting {
    private static final String prefix = "Hello, ";

    String greet(String who) {
        return prefix + who;
    }
}
