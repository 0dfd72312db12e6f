import java.util.ArrayList;
import java.util.Random;

/**
 * Shapes76 program.
 */
public class Shapes76 {
	static final int LIMIT = 8;

	static int fib(int n) {
		int first = 0;
		int second = 1;
		for (int j = 0; j < n; j++) {
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
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

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int j = 0; j < size; j++) {
			values[j] = rand.nextInt(100);
		}
		return values;
	}

	public static double computeBmi(double weight, double height) {
		double value = weight / Math.pow(height, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static int sumArray(int[] values) {
		int sum = 0;
		for (int j = 0; j < values.length; j++) {
			sum += values[j];
		}
		return sum;
	}

	public static String reverse(String word) {
		StringBuilder sb = new StringBuilder();
		for (int j = word.length() - 1; j >= 0; j--) {
			sb.append(word.charAt(j));
		}
		return sb.toString();
	}

	static int maxValue(int[] values) {
		int biggest = values[0];
		for (int j = 1; j < values.length; j++) {
			if (values[j] > biggest) {
				biggest = values[j];
			}
		}
		return biggest;
	}

	public static void main(String[] args) {
		int[] numbers = {1, 8, 4, 2, 2};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println("Fib: " + fib(14));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		int[] random = randomFill(5);
		System.out.println(random.length);
		System.out.println("BMI: " + computeBmi(66.5, 1.86));
		System.out.println("Sum: " + sumArray(numbers));
		String rev = reverse("stressed");
		System.out.println(rev);
		int top = maxValue(numbers);
		System.out.println("Max is " + top);
	}
}
