// Lab assignment
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

/**
 * Loops155 program.
 */
public class Loops155 {
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

	public static double celsiusToF(double c) {
		return c * 9 / 5 + 32;
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

	static boolean isEven(int x) {
		return x % 2 == 0;
	}

	public static int addAll(int[] values) {
		int total = 0;
		for (int i = 0; i < values.length; i++) {
			total += values[i];
		}
		return total;
	}

	static void bubbleSort(int[] values) {
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

	public static long factorial(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * factorial(x - 1);
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

	public static String reversed(String line) {
		StringBuilder sb = new StringBuilder();
		for (int i = line.length() - 1; i >= 0; i--) {
			sb.append(line.charAt(i));
		}
		return sb.toString();
	}

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static int absolute(int x) {
		return x < 0 ? -x : x;
	}

	static int fibonacci(int x) {
		int first = 0;
		int second = 1;
		for (int i = 0; i < x; i++) {
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	static boolean prime(int x) {
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

	static int vowels(String line) {
		int count = 0;
		for (int i = 0; i < line.length(); i++) {
			char ch = Character.toLowerCase(line.charAt(i));
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

	public static int toNumber(String line) {
		try {
			return Integer.parseInt(line.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static int largest(int[] values) {
		int best = values[0];
		for (int i = 1; i < values.length; i++) {
			if (values[i] > best) {
				best = values[i];
			}
		}
		return best;
	}

	public static int find(int[] values, int wanted) {
		for (int i = 0; i < values.length; i++) {
			if (values[i] == wanted) {
				return i;
			}
		}
		return -1;
	}

	public static double mean(int[] values) {
		double total = 0;
		for (int v : values) {
			total = total + v;
		}
		return total / values.length;
	}

	public static double bodyMassIndex(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	static double raise(double base, int exp) {
		double result = 1;
		for (int i = 0; i < exp; i++) {
			result *= base;
		}
		return result;
	}

	public static void drawStars(int size) {
		for (int row = 1; row <= size; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static int sumDigits(int x) {
		int total = 0;
		while (x > 0) {
			total += x % 10;
			x /= 10;
		}
		return total;
	}

	static void countdown(int left) {
		do {
			System.out.println(left);
			left--;
			} while (left > 0);
			System.out.println("Go!");
		}

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int i = 0; i < size; i++) {
			values[i] = rand.nextInt(100);
		}
		return values;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {9, 1, 4, 5, 4, 7};
		Point p = new Point(8, 5);
		System.out.println(p.distance());
		System.out.println(celsiusToF(12.0));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		if (isEven(27)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println("Sum: " + addAll(numbers));
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println(factorial(7));
		System.out.println("Grade: " + toLetter(55));
		String rev = reversed("stressed");
		System.out.println(rev);
		System.out.println("GCD: " + gcd(62, 53));
		System.out.println(absolute(-14));
		System.out.println("Fib: " + fibonacci(8));
		for (int q = 2; q < 16; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println(vowels("banana"));
		System.out.println(palindrome("noon"));
		int parsed = toNumber("42");
		System.out.println(parsed);
		int top = largest(numbers);
		System.out.println("Max is " + top);
		int pos = find(numbers, 5);
		System.out.println("Found at " + pos);
		double avg = mean(numbers);
		System.out.println("Average: " + avg);
		System.out.println("BMI: " + bodyMassIndex(50.5, 1.87));
		System.out.println(raise(2, 9));
		drawStars(6);
		System.out.println("Digits: " + sumDigits(57291));
		countdown(4);
		int[] random = randomFill(5);
		System.out.println(random.length);
		sc.close();
	}
}
