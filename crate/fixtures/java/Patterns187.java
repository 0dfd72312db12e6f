import java.util.ArrayList;
import java.util.Scanner;

public class Patterns187 {
	static ArrayList<Integer> collectEven(int[] scores) {
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : scores) {
			if (v % 2 == 0) {
				items.add(v);
			}
		}
		return items;
	}

	public static void printTriangle(int rows) {
		for (int row = 1; row <= rows; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static String reverse(String line) {
		StringBuilder sb = new StringBuilder();
		for (int i = line.length() - 1; i >= 0; i--) {
			sb.append(line.charAt(i));
		}
		return sb.toString();
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {2, 1, 5, 5, 4};
		ArrayList<Integer> even = collectEven(numbers);
		System.out.println(even.size() + " even numbers");
		printTriangle(3);
		String rev = reverse("java");
		System.out.println(rev);
		sc.close();
	}
}
