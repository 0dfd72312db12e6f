// Lab assignment
import java.util.Arrays;
import java.util.Random;

/**
 * BankAccount8 program.
 */
public class BankAccount8 {
	static final int LIMIT = 65;

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

	static int[] fillRandom(int size) {
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int j = 0; j < size; j++) {
			values[j] = rand.nextInt(100);
		}
		return values;
	}

	public static double celsiusToF(double degrees) {
		return degrees * 9 / 5 + 32;
	}

	public static double bodyMassIndex(double kg, double meters) {
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static int digitSum(int x) {
		int acc = 0;
		while (x > 0) {
			acc += x % 10;
			x /= 10;
		}
		return acc;
	}

	public static int absolute(int x) {
		return x < 0 ? -x : x;
	}

	public static double computeAverage(int[] values) {
		double acc = 0;
		for (int v : values) {
			acc = acc + v;
		}
		return acc / values.length;
	}

	static void sort(int[] values) {
		for (int j = 0; j < values.length - 1; j++) {
			for (int m = 0; m < values.length - 1 - j; m++) {
				if (values[m] > values[m + 1]) {
					int tmp = values[m];
					values[m] = values[m + 1];
					values[m + 1] = tmp;
				}
			}
		}
	}

	static int fib(int x) {
		int first = 0;
		int second = 1;
		for (int j = 0; j < x; j++) {
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	public static void main(String[] args) {
		int[] numbers = {7, 7, 4, 9, 7, 2, 6};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		Point p = new Point(6, 7);
		System.out.println(p.distance());
		int[] random = fillRandom(8);
		System.out.println(random.length);
		System.out.println(celsiusToF(37.0));
		System.out.println("BMI: " + bodyMassIndex(58.5, 1.72));
		System.out.println("Digits: " + digitSum(69432));
		System.out.println(absolute(-50));
		double avg = computeAverage(numbers);
		System.out.println("Average: " + avg);
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("Fib: " + fib(6));
	}
}
