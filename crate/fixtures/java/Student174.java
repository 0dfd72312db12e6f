import java.util.Arrays;

public class Student174 {
	static final int LIMIT = 24;

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static int absolute(int num) {
		return num < 0 ? -num : num;
	}

	static boolean even(int num) {
		return num % 2 == 0;
	}

	public static double toFahrenheit(double c) {
		return c * 9 / 5 + 32;
	}

	static void sort(int[] arr) {
		for (int j = 0; j < arr.length - 1; j++) {
			for (int m = 0; m < arr.length - 1 - j; m++) {
				if (arr[m] > arr[m + 1]) {
					int tmp = arr[m];
					arr[m] = arr[m + 1];
					arr[m + 1] = tmp;
				}
			}
		}
	}

	public static void printTriangle(int rows) {
		for (int row = 1; row <= rows; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static void main(String[] args) {
		int[] numbers = {6, 5, 9, 3, 4, 1, 5};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println("GCD: " + gcd(64, 35));
		System.out.println(absolute(36));
		if (even(19)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println(toFahrenheit(30.0));
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		printTriangle(6);
	}
}
