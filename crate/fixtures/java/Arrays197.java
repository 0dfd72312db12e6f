// Lab assignment
import java.util.Random;
import java.util.Scanner;

public class Arrays197 {
	static final int LIMIT = 28;

	public static int digitSum(int num) {
		int sum = 0;
		while (num > 0) {
			sum += num % 10;
			num /= 10;
		}
		return sum;
	}

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] data = new int[size];
		for (int idx = 0; idx < size; idx++) {
			data[idx] = rand.nextInt(100);
		}
		return data;
	}

	static int fibonacci(int num) {
		int a = 0;
		int b = 1;
		for (int idx = 0; idx < num; idx++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	static boolean isEven(int num) {
		return num % 2 == 0;
	}

	public static double bodyMassIndex(double kg, double meters) {
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static double convert(double degrees) {
		return degrees * 9 / 5 + 32;
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

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {3, 3, 2, 3, 2, 4, 3};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println("Digits: " + digitSum(8913));
		int[] random = randomFill(4);
		System.out.println(random.length);
		System.out.println("Fib: " + fibonacci(19));
		if (isEven(8)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println("BMI: " + bodyMassIndex(84.5, 1.73));
		System.out.println(convert(25.0));
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		sc.close();
	}
}
