import java.util.Scanner;

/**
 * Matrix110 program.
 */
public class Matrix110 {
	public static boolean isPalindrome(String text) {
		int left = 0;
		int right = text.length() - 1;
		while (left < right) {
			if (text.charAt(left) != text.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	public static int abs(int x) {
		return x < 0 ? -x : x;
	}

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	static char letterGrade(int mark) {
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

	public static long factorial(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * factorial(x - 1);
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

	public static double average(int[] data) {
		double acc = 0;
		for (int v : data) {
			acc = acc + v;
		}
		return acc / data.length;
	}

	static int findMax(int[] data) {
		int max = data[0];
		for (int idx = 1; idx < data.length; idx++) {
			if (data[idx] > max) {
				max = data[idx];
			}
		}
		return max;
	}

	public static double computeBmi(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static void drawStars(int height) {
		for (int row = 1; row <= height; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {6, 4, 2, 6};
		System.out.println(isPalindrome("hello"));
		System.out.println(abs(17));
		System.out.println("GCD: " + greatestDivisor(19, 35));
		System.out.println("Grade: " + letterGrade(45));
		System.out.println(factorial(12));
		for (int q = 2; q < 21; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		System.out.println("BMI: " + computeBmi(81.5, 1.92));
		drawStars(6);
		sc.close();
	}
}
