interface Greeting {
    String greet(String who);
}

class Polite implements Greeting {
    public String greet(String who) {
        return "Dear " + who;
    }

    public static void main(String[] args) {
        Greeting g = new Polite();
        System.out.println(g.greet("reader"));
    }
}
