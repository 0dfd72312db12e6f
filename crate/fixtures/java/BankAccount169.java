import java.util.Random;

public class BankAccount169 {
	public static double computeBmi(double wgt, double hgt) {
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	static int[] fillRandom(int size) {
		Random rand = new Random(42);
		int[] arr = new int[size];
		for (int j = 0; j < size; j++) {
			arr[j] = rand.nextInt(100);
		}
		return arr;
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

	static char toLetter(int mark) {
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

	public static int find(int[] arr, int target) {
		for (int j = 0; j < arr.length; j++) {
			if (arr[j] == target) {
				return j;
			}
		}
		return -1;
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

	public static String reversed(String word) {
		StringBuilder sb = new StringBuilder();
		for (int j = word.length() - 1; j >= 0; j--) {
			sb.append(word.charAt(j));
		}
		return sb.toString();
	}

	public static void main(String[] args) {
		int[] numbers = {7, 2, 5};
		System.out.println("BMI: " + computeBmi(55.5, 1.94));
		int[] random = fillRandom(3);
		System.out.println(random.length);
		System.out.println(isPalindrome("noon"));
		System.out.println("Grade: " + toLetter(50));
		int pos = find(numbers, 7);
		System.out.println("Found at " + pos);
		for (int q = 2; q < 20; q++) {
			if (prime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		String rev = reversed("level");
		System.out.println(rev);
	}
}
