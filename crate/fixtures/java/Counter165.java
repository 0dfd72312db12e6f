import java.util.Random;

/**
 * Counter165 program.
 */
public class Counter165 {
	static final int LIMIT = 85;

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

	public static boolean isPalindrome(String word) {
		int left = 0;
		int right = word.length() - 1;
		while (left < right) {
			if (word.charAt(left) != word.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
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

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static void main(String[] args) {
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		Point p = new Point(0, 6);
		System.out.println(p.distance());
		System.out.println(isPalindrome("noon"));
		int[] random = randomFill(3);
		System.out.println(random.length);
		System.out.println(fact(4));
		System.out.println("GCD: " + gcd(26, 39));
	}
}
