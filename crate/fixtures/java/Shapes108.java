import java.util.Random;

public class Shapes108 {
	static final int LIMIT = 54;

	public static int indexOf(int[] values, int wanted) {
		for (int k = 0; k < values.length; k++) {
			if (values[k] == wanted) {
				return k;
			}
		}
		return -1;
	}

	static int fibonacci(int x) {
		int first = 0;
		int second = 1;
		for (int k = 0; k < x; k++) {
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int k = 0; k < size; k++) {
			values[k] = rand.nextInt(100);
		}
		return values;
	}

	public static long fact(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * fact(x - 1);
	}

	public static void main(String[] args) {
		int[] numbers = {8, 8, 3, 3, 6};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		int pos = indexOf(numbers, 5);
		System.out.println("Found at " + pos);
		System.out.println("Fib: " + fibonacci(5));
		int[] random = randomFill(8);
		System.out.println(random.length);
		System.out.println(fact(4));
	}
}
