public class Primes192 {
	static final int LIMIT = 64;

	public static double toFahrenheit(double c) {
		return c * 9 / 5 + 32;
	}

	static boolean isEven(int x) {
		return x % 2 == 0;
	}

	public static void main(String[] args) {
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println(toFahrenheit(25.0));
		if (isEven(4)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
	}
}
