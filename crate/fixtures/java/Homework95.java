// Homework
public class Homework95 {
	static final int LIMIT = 33;

	public static String reversed(String line) {
		StringBuilder out = new StringBuilder();
		for (int j = line.length() - 1; j >= 0; j--) {
			out.append(line.charAt(j));
		}
		return out.toString();
	}

	public static void main(String[] args) {
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		String rev = reversed("stressed");
		System.out.println(rev);
	}
}
