import java.util.Scanner;

public class Patterns150 {
	static final int LIMIT = 51;

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		sc.close();
	}
}
