import java.util.ArrayList;
import java.util.List;
import java.util.function.Function;

public class Mapper<T> {
    private final List<T> items = new ArrayList<>();

    public void add(T item) {
        items.add(item);
    }

    public <R> List<R> map(Function<T, R> f) {
        List<R> out = new ArrayList<>();
        for (int i = 0; i < items.size(); i++) {
            out.add(f.apply(items.get(i)));
        }
        return out;
    }

    public int total(Function<T, Integer> weight) {
        int sum = 0;
        for (int i = 0; i < items.size(); i++) {
            sum += weight.apply(items.get(i));
        }
        return sum;
    }
}
