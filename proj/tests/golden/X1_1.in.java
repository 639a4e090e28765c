import java.sql.Connection;
import java.sql.SQLException;

public class Query {
    void run(Connection c) throws SQLException {
        c.close();
    }
}
