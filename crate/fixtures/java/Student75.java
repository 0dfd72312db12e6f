public class Student75 {
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

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	static int fibonacci(int n) {
		int prev = 0;
		int curr = 1;
		for (int k = 0; k < n; k++) {
			int next = prev + curr;
			prev = curr;
			curr = next;
		}
		return prev;
	}

	static boolean divisibleByTwo(int n) {
		return n % 2 == 0;
	}

	static boolean prime(int n) {
		if (n < 2) {
			return false;
		}
		int factor = 2;
		while (factor * factor <= n) {
			if (n % factor == 0) {
				return false;
			}
			factor++;
		}
		return true;
	}

	public static int totalOf(int[] values) {
		int result = 0;
		for (int k = 0; k < values.length; k++) {
			result += values[k];
		}
		return result;
	}

	public static void main(String[] args) {
		int[] numbers = {4, 4, 7, 6, 6};
		Point p = new Point(1, 5);
		System.out.println(p.distance());
		System.out.println("GCD: " + greatestDivisor(68, 52));
		System.out.println("Fib: " + fibonacci(16));
		if (divisibleByTwo(28)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		for (int q = 2; q < 40; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println("Sum: " + totalOf(numbers));
	}
}
