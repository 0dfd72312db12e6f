// Homework
import java.util.Arrays;

public class GradeBook74 {
	static int findMax(int[] data) {
		int best = data[0];
		for (int k = 1; k < data.length; k++) {
			if (data[k] > best) {
				best = data[k];
			}
		}
		return best;
	}

	static double raise(double base, int exp) {
		double result = 1;
		for (int k = 0; k < exp; k++) {
			result *= base;
		}
		return result;
	}

	public static double bmi(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static boolean palindrome(String line) {
		int left = 0;
		int right = line.length() - 1;
		while (left < right) {
			if (line.charAt(left) != line.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static boolean prime(int num) {
		if (num < 2) {
			return false;
		}
		int factor = 2;
		while (factor * factor <= num) {
			if (num % factor == 0) {
				return false;
			}
			factor++;
		}
		return true;
	}

	static void launch(int n) {
		do {
			System.out.println(n);
			n--;
			} while (n > 0);
			System.out.println("Go!");
		}

	public static void printTriangle(int height) {
		for (int row = 1; row <= height; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static int totalOf(int[] data) {
		int sum = 0;
		for (int k = 0; k < data.length; k++) {
			sum += data[k];
		}
		return sum;
	}

	static void sortArray(int[] data) {
		for (int k = 0; k < data.length - 1; k++) {
			for (int m = 0; m < data.length - 1 - k; m++) {
				if (data[m] > data[m + 1]) {
					int swap = data[m];
					data[m] = data[m + 1];
					data[m + 1] = swap;
				}
			}
		}
	}

	public static void main(String[] args) {
		int[] numbers = {5, 4, 2, 8};
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		System.out.println(raise(2, 2));
		System.out.println("BMI: " + bmi(53.5, 1.67));
		System.out.println(palindrome("noon"));
		for (int q = 2; q < 26; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		launch(3);
		printTriangle(4);
		System.out.println("Sum: " + totalOf(numbers));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
	}
}
