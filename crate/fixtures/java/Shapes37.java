// Exercise
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

/**
 * Shapes37 program.
 */
public class Shapes37 {
	static final int LIMIT = 37;

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

	public static int abs(int x) {
		return x < 0 ? -x : x;
	}

	public static double computeAverage(int[] values) {
		double total = 0;
		for (int v : values) {
			total = total + v;
		}
		return total / values.length;
	}

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static String backwards(String input) {
		StringBuilder out = new StringBuilder();
		for (int i = input.length() - 1; i >= 0; i--) {
			out.append(input.charAt(i));
		}
		return out.toString();
	}

	static int[] fillRandom(int size) {
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int i = 0; i < size; i++) {
			values[i] = rand.nextInt(100);
		}
		return values;
	}

	public static double computeBmi(double kg, double meters) {
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	static void sortArray(int[] values) {
		for (int i = 0; i < values.length - 1; i++) {
			for (int m = 0; m < values.length - 1 - i; m++) {
				if (values[m] > values[m + 1]) {
					int swap = values[m];
					values[m] = values[m + 1];
					values[m + 1] = swap;
				}
			}
		}
	}

	public static int digitSum(int x) {
		int total = 0;
		while (x > 0) {
			total += x % 10;
			x /= 10;
		}
		return total;
	}

	public static boolean palindrome(String input) {
		int left = 0;
		int right = input.length() - 1;
		while (left < right) {
			if (input.charAt(left) != input.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	public static void pattern(int rows) {
		for (int row = 1; row <= rows; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	static void countDown(int left) {
		do {
			System.out.println(left);
			left--;
			} while (left > 0);
			System.out.println("Go!");
		}

	static boolean checkPrime(int x) {
		if (x < 2) {
			return false;
		}
		int d = 2;
		while (d * d <= x) {
			if (x % d == 0) {
				return false;
			}
			d++;
		}
		return true;
	}

	static boolean divisibleByTwo(int x) {
		return x % 2 == 0;
	}

	static char toLetter(int mark) {
		if (mark >= 90) {
			return 'A';
		} else if (mark >= 80) {
			return 'B';
		} else if (mark >= 70) {
			return 'C';
		} else {
			return 'F';
		}
	}

	public static int search(int[] values, int wanted) {
		for (int i = 0; i < values.length; i++) {
			if (values[i] == wanted) {
				return i;
			}
		}
		return -1;
	}

	public static double celsiusToF(double celsius) {
		return celsius * 9 / 5 + 32;
	}

	public static int parseOrZero(String input) {
		try {
			return Integer.parseInt(input.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static int maxValue(int[] values) {
		int max = values[0];
		for (int i = 1; i < values.length; i++) {
			if (values[i] > max) {
				max = values[i];
			}
		}
		return max;
	}

	static int countVowels(String input) {
		int count = 0;
		for (int i = 0; i < input.length(); i++) {
			char ch = Character.toLowerCase(input.charAt(i));
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

	public static int addAll(int[] values) {
		int total = 0;
		for (int i = 0; i < values.length; i++) {
			total += values[i];
		}
		return total;
	}

	static double power(double b, int e) {
		double result = 1;
		for (int i = 0; i < e; i++) {
			result *= b;
		}
		return result;
	}

	public static long factorial(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * factorial(x - 1);
	}

	static ArrayList<Integer> filterEven(int[] values) {
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : values) {
			if (v % 2 == 0) {
				items.add(v);
			}
		}
		return items;
	}

	static int fib(int x) {
		int first = 0;
		int second = 1;
		for (int i = 0; i < x; i++) {
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	public static void main(String[] args) {
		int[] numbers = {2, 8, 2};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		Point p = new Point(9, 3);
		System.out.println(p.distance());
		System.out.println(abs(-22));
		double avg = computeAverage(numbers);
		System.out.println("Average: " + avg);
		System.out.println("GCD: " + gcd(83, 35));
		String rev = backwards("stressed");
		System.out.println(rev);
		int[] random = fillRandom(4);
		System.out.println(random.length);
		System.out.println("BMI: " + computeBmi(73.5, 1.70));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("Digits: " + digitSum(76808));
		System.out.println(palindrome("hello"));
		pattern(3);
		countDown(4);
		for (int q = 2; q < 31; q++) {
			if (checkPrime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		if (divisibleByTwo(15)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println("Grade: " + toLetter(75));
		int pos = search(numbers, 2);
		System.out.println("Found at " + pos);
		System.out.println(celsiusToF(30.0));
		int parsed = parseOrZero("42");
		System.out.println(parsed);
		int top = maxValue(numbers);
		System.out.println("Max is " + top);
		System.out.println(countVowels("banana"));
		System.out.println("Sum: " + addAll(numbers));
		System.out.println(power(2, 2));
		System.out.println(factorial(5));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println("Fib: " + fib(6));
	}
}
