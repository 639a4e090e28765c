import java.sql.Connection;
import java.sql.DriverManager;
import java.sql.SQLException;

public class CloseHelper {
    private void closeConnection(Connection c) throws SQLException {
        c.close();
    }

    public void query(String url) throws SQLException {
        Connection c = DriverManager.getConnection(url);
        c.setAutoCommit(false);
        closeConnection(c);
    }
}
