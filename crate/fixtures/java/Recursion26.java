// Homework
import java.util.Arrays;

public class Recursion26 {
	static final int LIMIT = 87;

	public static int find(int[] nums, int wanted) {
		for (int j = 0; j < nums.length; j++) {
			if (nums[j] == wanted) {
				return j;
			}
		}
		return -1;
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

	public static void printTriangle(int height) {
		for (int row = 1; row <= height; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static int safeParse(String text) {
		try {
			return Integer.parseInt(text.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static boolean isEven(int n) {
		return n % 2 == 0;
	}

	static void sort(int[] nums) {
		for (int j = 0; j < nums.length - 1; j++) {
			for (int m = 0; m < nums.length - 1 - j; m++) {
				if (nums[m] > nums[m + 1]) {
					int swap = nums[m];
					nums[m] = nums[m + 1];
					nums[m + 1] = swap;
				}
			}
		}
	}

	public static int sumDigits(int n) {
		int total = 0;
		while (n > 0) {
			total += n % 10;
			n /= 10;
		}
		return total;
	}

	public static double bodyMassIndex(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	static void countdown(int n) {
		do {
			System.out.println(n);
			n--;
			} while (n > 0);
			System.out.println("Go!");
		}

	static int fibonacci(int n) {
		int a = 0;
		int b = 1;
		for (int j = 0; j < n; j++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	public static void main(String[] args) {
		int[] numbers = {7, 1, 8};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		int pos = find(numbers, 2);
		System.out.println("Found at " + pos);
		System.out.println(isPalindrome("racecar"));
		printTriangle(4);
		int parsed = safeParse("42");
		System.out.println(parsed);
		if (isEven(1)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("Digits: " + sumDigits(48195));
		System.out.println("BMI: " + bodyMassIndex(87.5, 1.57));
		countdown(4);
		System.out.println("Fib: " + fibonacci(11));
	}
}
