public class Loops82 {
	public static String reversed(String text) {
		StringBuilder builder = new StringBuilder();
		for (int idx = text.length() - 1; idx >= 0; idx--) {
			builder.append(text.charAt(idx));
		}
		return builder.toString();
	}

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static long fact(int n) {
		if (n <= 1) {
			return 1;
		}
		return n * fact(n - 1);
	}

	static boolean even(int n) {
		return n % 2 == 0;
	}

	static int countVowels(String text) {
		int count = 0;
		for (int idx = 0; idx < text.length(); idx++) {
			char ch = Character.toLowerCase(text.charAt(idx));
			switch (ch) {
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				count++;
				break;
				default:
				break;
			}
		}
		return count;
	}

	public static int indexOf(int[] scores, int wanted) {
		for (int idx = 0; idx < scores.length; idx++) {
			if (scores[idx] == wanted) {
				return idx;
			}
		}
		return -1;
	}

	public static int abs(int n) {
		return n < 0 ? -n : n;
	}

	static int fibonacci(int n) {
		int a = 0;
		int b = 1;
		for (int idx = 0; idx < n; idx++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
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
		int[] numbers = {3, 7, 8, 9, 5};
		String rev = reversed("java");
		System.out.println(rev);
		System.out.println("GCD: " + greatestDivisor(67, 39));
		System.out.println(fact(6));
		if (even(5)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println(countVowels("banana"));
		int pos = indexOf(numbers, 4);
		System.out.println("Found at " + pos);
		System.out.println(abs(-21));
		System.out.println("Fib: " + fibonacci(15));
		System.out.println(palindrome("racecar"));
	}
}
