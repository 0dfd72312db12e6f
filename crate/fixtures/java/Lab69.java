/**
 * Lab69 program.
 */
public class Lab69 {
	public static double toFahrenheit(double celsius) {
		return celsius * 9 / 5 + 32;
	}

	static int vowels(String input) {
		int c = 0;
		for (int j = 0; j < input.length(); j++) {
			char ch = Character.toLowerCase(input.charAt(j));
			switch (ch) {
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				c++;
				break;
				default:
				break;
			}
		}
		return c;
	}

	public static int absolute(int num) {
		return num < 0 ? -num : num;
	}

	public static String backwards(String input) {
		StringBuilder sb = new StringBuilder();
		for (int j = input.length() - 1; j >= 0; j--) {
			sb.append(input.charAt(j));
		}
		return sb.toString();
	}

	static int largest(int[] nums) {
		int best = nums[0];
		for (int j = 1; j < nums.length; j++) {
			if (nums[j] > best) {
				best = nums[j];
			}
		}
		return best;
	}

	public static double bmi(double weight, double height) {
		double value = weight / Math.pow(height, 2);
		return Math.round(value * 10) / 10.0;
	}

	static boolean isPrime(int num) {
		if (num < 2) {
			return false;
		}
		int d = 2;
		while (d * d <= num) {
			if (num % d == 0) {
				return false;
			}
			d++;
		}
		return true;
	}

	public static int sumDigits(int num) {
		int result = 0;
		while (num > 0) {
			result += num % 10;
			num /= 10;
		}
		return result;
	}

	public static double average(int[] nums) {
		double result = 0;
		for (int v : nums) {
			result = result + v;
		}
		return result / nums.length;
	}

	public static void main(String[] args) {
		int[] numbers = {1, 5, 7, 3, 4};
		System.out.println(toFahrenheit(5.0));
		System.out.println(vowels("hello world"));
		System.out.println(absolute(-18));
		String rev = backwards("java");
		System.out.println(rev);
		int top = largest(numbers);
		System.out.println("Max is " + top);
		System.out.println("BMI: " + bmi(57.5, 1.78));
		for (int q = 2; q < 37; q++) {
			if (isPrime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println("Digits: " + sumDigits(80603));
		double avg = average(numbers);
		System.out.println("Average: " + avg);
	}
}
