// Homework
import java.util.Arrays;

public class BankAccount30 {
	static class Point {
		int x;
		int y;
		Point(int x, int y) {
			this.x = x;
			this.y = y;
		}
		double distance() {
			return Math.sqrt(x * x + y * y);
		}
	}

	static void bubbleSort(int[] nums) {
		for (int k = 0; k < nums.length - 1; k++) {
			for (int m = 0; m < nums.length - 1 - k; m++) {
				if (nums[m] > nums[m + 1]) {
					int tmp = nums[m];
					nums[m] = nums[m + 1];
					nums[m + 1] = tmp;
				}
			}
		}
	}

	public static boolean isPalindrome(String word) {
		int left = 0;
		int right = word.length() - 1;
		while (left < right) {
			if (word.charAt(left) != word.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	static int fib(int x) {
		int a = 0;
		int b = 1;
		for (int k = 0; k < x; k++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	public static int absolute(int x) {
		return x < 0 ? -x : x;
	}

	public static String reverse(String word) {
		StringBuilder builder = new StringBuilder();
		for (int k = word.length() - 1; k >= 0; k--) {
			builder.append(word.charAt(k));
		}
		return builder.toString();
	}

	public static void main(String[] args) {
		int[] numbers = {7, 3, 2, 1};
		Point p = new Point(7, 2);
		System.out.println(p.distance());
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println(isPalindrome("hello"));
		System.out.println("GCD: " + gcd(31, 59));
		System.out.println("Fib: " + fib(20));
		System.out.println(absolute(-28));
		String rev = reverse("java");
		System.out.println(rev);
	}
}
