import java.util.Comparator;
import java.util.List;

public class Sorter {
    public void sort(List<String> items) {
        items.sort(new Comparator<String>() {
            public int compare(String a, String b) {
                return a.length() - b.length();
            }
        });
    }
}
