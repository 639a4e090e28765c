public class StaticCall {
    static boolean hasArguments(String[] args) {
        return args.length > 0;
    }

    public static void main(String[] args) {
        if (hasArguments(args)) {
            System.out.println("args");
        }
    }
}
