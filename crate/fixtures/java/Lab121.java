import java.util.ArrayList;

public class Lab121 {
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

	public static int digitSum(int n) {
		int acc = 0;
		while (n > 0) {
			acc += n % 10;
			n /= 10;
		}
		return acc;
	}

	public static double bmi(double kg, double meters) {
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	static boolean divisibleByTwo(int n) {
		return n % 2 == 0;
	}

	static boolean prime(int n) {
		if (n < 2) {
			return false;
		}
		int d = 2;
		while (d * d <= n) {
			if (n % d == 0) {
				return false;
			}
			d++;
		}
		return true;
	}

	public static double average(int[] data) {
		double acc = 0;
		for (int v : data) {
			acc = acc + v;
		}
		return acc / data.length;
	}

	static double pow(double x, int n) {
		double result = 1;
		for (int j = 0; j < n; j++) {
			result *= x;
		}
		return result;
	}

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static int parseOrZero(String input) {
		try {
			return Integer.parseInt(input.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static int vowels(String input) {
		int count = 0;
		for (int j = 0; j < input.length(); j++) {
			char ch = Character.toLowerCase(input.charAt(j));
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

	static ArrayList<Integer> filterEven(int[] data) {
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : data) {
			if (v % 2 == 0) {
				items.add(v);
			}
		}
		return items;
	}

	public static void main(String[] args) {
		int[] numbers = {4, 5, 8, 4, 7, 9, 6};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		Point p = new Point(0, 1);
		System.out.println(p.distance());
		System.out.println("Digits: " + digitSum(21267));
		System.out.println("BMI: " + bmi(82.5, 1.86));
		if (divisibleByTwo(28)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		for (int q = 2; q < 10; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		System.out.println(pow(2, 3));
		System.out.println("GCD: " + greatestDivisor(35, 18));
		int parsed = parseOrZero("abc");
		System.out.println(parsed);
		System.out.println(vowels("banana"));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
	}
}
