public class BankAccount90 {
	static final int LIMIT = 44;

	public static String reverse(String text) {
		StringBuilder out = new StringBuilder();
		for (int k = text.length() - 1; k >= 0; k--) {
			out.append(text.charAt(k));
		}
		return out.toString();
	}

	static boolean isEven(int x) {
		return x % 2 == 0;
	}

	static boolean prime(int x) {
		if (x < 2) {
			return false;
		}
		int factor = 2;
		while (factor * factor <= x) {
			if (x % factor == 0) {
				return false;
			}
			factor++;
		}
		return true;
	}

	public static double average(int[] arr) {
		double result = 0;
		for (int v : arr) {
			result = result + v;
		}
		return result / arr.length;
	}

	public static int parseOrZero(String text) {
		try {
			return Integer.parseInt(text.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	public static boolean palindrome(String text) {
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

	public static void main(String[] args) {
		int[] numbers = {4, 6, 3, 1, 9, 9};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		String rev = reverse("level");
		System.out.println(rev);
		if (isEven(23)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		for (int q = 2; q < 25; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		int parsed = parseOrZero("abc");
		System.out.println(parsed);
		System.out.println(palindrome("racecar"));
	}
}
