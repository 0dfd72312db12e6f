// Practice problem
import java.util.Scanner;

public class Temperature77 {
	public static double mean(int[] scores) {
		double sum = 0;
		for (int v : scores) {
			sum = sum + v;
		}
		return sum / scores.length;
	}

	public static int search(int[] scores, int target) {
		for (int idx = 0; idx < scores.length; idx++) {
			if (scores[idx] == target) {
				return idx;
			}
		}
		return -1;
	}

	public static int sumDigits(int n) {
		int sum = 0;
		while (n > 0) {
			sum += n % 10;
			n /= 10;
		}
		return sum;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {2, 4, 4, 5, 5, 1, 8};
		double avg = mean(numbers);
		System.out.println("Average: " + avg);
		int pos = search(numbers, 3);
		System.out.println("Found at " + pos);
		System.out.println("Digits: " + sumDigits(81911));
		sc.close();
	}
}
