// Exercise
import java.util.Scanner;

public class Shapes6 {
	static final int LIMIT = 73;

	static int countVowels(String input) {
		int found = 0;
		for (int i = 0; i < input.length(); i++) {
			char ch = Character.toLowerCase(input.charAt(i));
			switch (ch) {
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				found++;
				break;
				default:
				break;
			}
		}
		return found;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println(countVowels("hello world"));
		sc.close();
	}
}
