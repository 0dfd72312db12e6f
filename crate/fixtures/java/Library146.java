// Homework
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

public class Library146 {
	public static void pattern(int height) {
		for (int row = 1; row <= height; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] scores = new int[size];
		for (int idx = 0; idx < size; idx++) {
			scores[idx] = rand.nextInt(100);
		}
		return scores;
	}

	public static boolean isPalindrome(String text) {
		int left = 0;
		int right = text.length() - 1;
		while (left < right) {
			if (text.charAt(left) != text.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	public static int indexOf(int[] scores, int wanted) {
		for (int idx = 0; idx < scores.length; idx++) {
			if (scores[idx] == wanted) {
				return idx;
			}
		}
		return -1;
	}

	static void sort(int[] scores) {
		for (int idx = 0; idx < scores.length - 1; idx++) {
			for (int m = 0; m < scores.length - 1 - idx; m++) {
				if (scores[m] > scores[m + 1]) {
					int temp = scores[m];
					scores[m] = scores[m + 1];
					scores[m + 1] = temp;
				}
			}
		}
	}

	static char toLetter(int score) {
		if (score >= 90) {
			return 'A';
		} else if (score >= 80) {
			return 'B';
		} else if (score >= 70) {
			return 'C';
		} else {
			return 'F';
		}
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {3, 7, 3, 7, 7};
		pattern(4);
		int[] random = randomFill(7);
		System.out.println(random.length);
		System.out.println(isPalindrome("hello"));
		int pos = indexOf(numbers, 8);
		System.out.println("Found at " + pos);
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("Grade: " + toLetter(80));
		sc.close();
	}
}
