// Exercise
import java.util.Arrays;
import java.util.Scanner;

public class Calculator173 {
	public static int parseOrZero(String line) {
		try {
			return Integer.parseInt(line.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	static void bubbleSort(int[] nums) {
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

	static boolean isPrime(int n) {
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

	static int countVowels(String line) {
		int count = 0;
		for (int j = 0; j < line.length(); j++) {
			char ch = Character.toLowerCase(line.charAt(j));
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

	public static boolean isPalindrome(String line) {
		int left = 0;
		int right = line.length() - 1;
		while (left < right) {
			if (line.charAt(left) != line.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static boolean even(int n) {
		return n % 2 == 0;
	}

	public static int sumDigits(int n) {
		int acc = 0;
		while (n > 0) {
			acc += n % 10;
			n /= 10;
		}
		return acc;
	}

	static int greatestDivisor(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static void main(String[] args) {
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {9, 1, 2, 4, 2, 4, 3};
		int parsed = parseOrZero(" 7 ");
		System.out.println(parsed);
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		for (int q = 2; q < 36; q++) {
			if (isPrime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println(countVowels("hello world"));
		System.out.println("Grade: " + letterGrade(50));
		System.out.println(isPalindrome("hello"));
		if (even(10)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		System.out.println("Digits: " + sumDigits(99955));
		System.out.println("GCD: " + greatestDivisor(52, 58));
		sc.close();
	}
}
