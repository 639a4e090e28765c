public class StaticCall {
    public static boolean hasArguments(String[] args) {
        return args.length > 0;
    }

    public int run(String[] args) {
        String name = null;
        if (hasArguments(args)) {
            name = args[0];
        }
        return name.length();
    }
}
