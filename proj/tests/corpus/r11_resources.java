import java.sql.Connection;
import java.sql.PreparedStatement;
import java.sql.ResultSet;
import java.sql.SQLException;
import javax.sql.DataSource;

public class Dao {
    private final DataSource source;

    public Dao(DataSource source) {
        this.source = source;
    }

    public int count() throws SQLException {
        try (Connection c = source.getConnection()) {
            PreparedStatement ps = c.prepareStatement("select 1");
            ResultSet rs = ps.executeQuery();
            rs.next();
            int n = rs.getInt(1);
            rs.close();
            return n;
        }
    }

    public Connection borrow() throws SQLException {
        Connection c = source.getConnection();
        return c;
    }
}
