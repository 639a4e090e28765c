public class Flags {
    boolean enabled() {
        return (false || false);
    }
}
