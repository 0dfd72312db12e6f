import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

/**
 * Student135 program.
 */
public class Student135 {
	static final int LIMIT = 25;

	public static long factorial(int n) {
		if (n <= 1) {
			return 1;
		}
		return n * factorial(n - 1);
	}

	public static void drawStars(int height) {
		for (int row = 1; row <= height; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	static ArrayList<Integer> filterEven(int[] nums) {
		ArrayList<Integer> result = new ArrayList<>();
		for (int v : nums) {
			if (v % 2 == 0) {
				result.add(v);
			}
		}
		return result;
	}

	public static int digitSum(int n) {
		int total = 0;
		while (n > 0) {
			total += n % 10;
			n /= 10;
		}
		return total;
	}

	public static int absolute(int n) {
		return n < 0 ? -n : n;
	}

	public static int find(int[] nums, int wanted) {
		for (int j = 0; j < nums.length; j++) {
			if (nums[j] == wanted) {
				return j;
			}
		}
		return -1;
	}

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	static void sortArray(int[] nums) {
		for (int j = 0; j < nums.length - 1; j++) {
			for (int m = 0; m < nums.length - 1 - j; m++) {
				if (nums[m] > nums[m + 1]) {
					int tmp = nums[m];
					nums[m] = nums[m + 1];
					nums[m + 1] = tmp;
				}
			}
		}
	}

	static int largest(int[] nums) {
		int max = nums[0];
		for (int j = 1; j < nums.length; j++) {
			if (nums[j] > max) {
				max = nums[j];
			}
		}
		return max;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {2, 4, 3, 8};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println(factorial(3));
		drawStars(3);
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println("Digits: " + digitSum(88870));
		System.out.println(absolute(6));
		int pos = find(numbers, 1);
		System.out.println("Found at " + pos);
		System.out.println("GCD: " + greatestDivisor(80, 47));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		int top = largest(numbers);
		System.out.println("Max is " + top);
		sc.close();
	}
}
