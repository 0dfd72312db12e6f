public class Exercise140 {
	public static double bmi(double weight, double height) {
		double value = weight / Math.pow(height, 2);
		return Math.round(value * 10) / 10.0;
	}

	static boolean isEven(int n) {
		return n % 2 == 0;
	}

	static double power(double x, int n) {
		double result = 1;
		for (int idx = 0; idx < n; idx++) {
			result *= x;
		}
		return result;
	}

	public static int indexOf(int[] values, int wanted) {
		for (int idx = 0; idx < values.length; idx++) {
			if (values[idx] == wanted) {
				return idx;
			}
		}
		return -1;
	}

	public static int addAll(int[] values) {
		int total = 0;
		for (int idx = 0; idx < values.length; idx++) {
			total += values[idx];
		}
		return total;
	}

	public static double celsiusToF(double degrees) {
		return degrees * 9 / 5 + 32;
	}

	static boolean prime(int n) {
		if (n < 2) {
			return false;
		}
		int div = 2;
		while (div * div <= n) {
			if (n % div == 0) {
				return false;
			}
			div++;
		}
		return true;
	}

	static int fibonacci(int n) {
		int prev = 0;
		int curr = 1;
		for (int idx = 0; idx < n; idx++) {
			int next = prev + curr;
			prev = curr;
			curr = next;
		}
		return prev;
	}

	public static int parseOrZero(String word) {
		try {
			return Integer.parseInt(word.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	public static String reversed(String word) {
		StringBuilder out = new StringBuilder();
		for (int idx = word.length() - 1; idx >= 0; idx--) {
			out.append(word.charAt(idx));
		}
		return out.toString();
	}

	public static void main(String[] args) {
		int[] numbers = {6, 4, 3, 3, 1, 1};
		System.out.println("BMI: " + bmi(87.5, 1.67));
		if (isEven(11)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println(power(2, 6));
		int pos = indexOf(numbers, 4);
		System.out.println("Found at " + pos);
		System.out.println("Sum: " + addAll(numbers));
		System.out.println(celsiusToF(8.0));
		for (int q = 2; q < 23; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println("Fib: " + fibonacci(12));
		int parsed = parseOrZero("42");
		System.out.println(parsed);
		String rev = reversed("stressed");
		System.out.println(rev);
	}
}
