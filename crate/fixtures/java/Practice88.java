import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

/**
 * Practice88 program.
 */
public class Practice88 {
	static final int LIMIT = 74;

	public static int digitSum(int x) {
		int total = 0;
		while (x > 0) {
			total += x % 10;
			x /= 10;
		}
		return total;
	}

	public static String reverse(String input) {
		StringBuilder sb = new StringBuilder();
		for (int j = input.length() - 1; j >= 0; j--) {
			sb.append(input.charAt(j));
		}
		return sb.toString();
	}

	public static double computeBmi(double weight, double height) {
		double value = weight / Math.pow(height, 2);
		return Math.round(value * 10) / 10.0;
	}

	static ArrayList<Integer> evens(int[] scores) {
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : scores) {
			if (v % 2 == 0) {
				items.add(v);
			}
		}
		return items;
	}

	static double raise(double x, int n) {
		double result = 1;
		for (int j = 0; j < n; j++) {
			result *= x;
		}
		return result;
	}

	public static int absolute(int x) {
		return x < 0 ? -x : x;
	}

	public static int toNumber(String input) {
		try {
			return Integer.parseInt(input.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static int vowels(String input) {
		int count = 0;
		for (int j = 0; j < input.length(); j++) {
			char ch = Character.toLowerCase(input.charAt(j));
			switch (ch) {
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				count++;
				break;
				default:
				break;
			}
		}
		return count;
	}

	static void bubbleSort(int[] scores) {
		for (int j = 0; j < scores.length - 1; j++) {
			for (int m = 0; m < scores.length - 1 - j; m++) {
				if (scores[m] > scores[m + 1]) {
					int swap = scores[m];
					scores[m] = scores[m + 1];
					scores[m + 1] = swap;
				}
			}
		}
	}

	public static long factorial(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * factorial(x - 1);
	}

	static char letterGrade(int score) {
		if (score >= 90) {
			return 'A';
		} else if (score >= 80) {
			return 'B';
		} else if (score >= 70) {
			return 'C';
		} else {
			return 'F';
		}
	}

	static boolean even(int x) {
		return x % 2 == 0;
	}

	static void countdown(int remaining) {
		do {
			System.out.println(remaining);
			remaining--;
			} while (remaining > 0);
			System.out.println("Go!");
		}

	public static int sumArray(int[] scores) {
		int total = 0;
		for (int j = 0; j < scores.length; j++) {
			total += scores[j];
		}
		return total;
	}

	public static void pattern(int rows) {
		for (int row = 1; row <= rows; row++) {
			for (int col = 0; col < row; col++) {
				System.out.print("*");
			}
			System.out.println();
		}
	}

	static boolean prime(int x) {
		if (x < 2) {
			return false;
		}
		int factor = 2;
		while (factor * factor <= x) {
			if (x % factor == 0) {
				return false;
			}
			factor++;
		}
		return true;
	}

	static int largest(int[] scores) {
		int best = scores[0];
		for (int j = 1; j < scores.length; j++) {
			if (scores[j] > best) {
				best = scores[j];
			}
		}
		return best;
	}

	public static double celsiusToF(double degrees) {
		return degrees * 9 / 5 + 32;
	}

	public static double average(int[] scores) {
		double total = 0;
		for (int v : scores) {
			total = total + v;
		}
		return total / scores.length;
	}

	public static int find(int[] scores, int target) {
		for (int j = 0; j < scores.length; j++) {
			if (scores[j] == target) {
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

	static int[] fillRandom(int size) {
		Random rand = new Random(42);
		int[] scores = new int[size];
		for (int j = 0; j < size; j++) {
			scores[j] = rand.nextInt(100);
		}
		return scores;
	}

	public static boolean isPalindrome(String input) {
		int left = 0;
		int right = input.length() - 1;
		while (left < right) {
			if (input.charAt(left) != input.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static int fibonacci(int x) {
		int a = 0;
		int b = 1;
		for (int j = 0; j < x; j++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {1, 3, 2};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		System.out.println("Digits: " + digitSum(66184));
		String rev = reverse("java");
		System.out.println(rev);
		System.out.println("BMI: " + computeBmi(87.5, 1.59));
		ArrayList<Integer> even = evens(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println(raise(2, 7));
		System.out.println(absolute(31));
		int parsed = toNumber("abc");
		System.out.println(parsed);
		System.out.println(vowels("programming"));
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println(factorial(11));
		System.out.println("Grade: " + letterGrade(51));
		if (even(17)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		countdown(3);
		System.out.println("Sum: " + sumArray(numbers));
		pattern(3);
		for (int q = 2; q < 15; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		int top = largest(numbers);
		System.out.println("Max is " + top);
		System.out.println(celsiusToF(21.0));
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		int pos = find(numbers, 4);
		System.out.println("Found at " + pos);
		System.out.println("GCD: " + greatestDivisor(79, 31));
		int[] random = fillRandom(8);
		System.out.println(random.length);
		System.out.println(isPalindrome("noon"));
		System.out.println("Fib: " + fibonacci(5));
		sc.close();
	}
}
