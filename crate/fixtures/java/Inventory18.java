// Lab assignment
public class Inventory18 {
	static int fib(int n) {
		int a = 0;
		int b = 1;
		for (int k = 0; k < n; k++) {
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	static int countVowels(String line) {
		int found = 0;
		for (int k = 0; k < line.length(); k++) {
			char ch = Character.toLowerCase(line.charAt(k));
			switch (ch) {
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				found++;
				break;
				default:
				break;
			}
		}
		return found;
	}

	public static int sumArray(int[] nums) {
		int sum = 0;
		for (int k = 0; k < nums.length; k++) {
			sum += nums[k];
		}
		return sum;
	}

	public static double computeAverage(int[] nums) {
		double sum = 0;
		for (int v : nums) {
			sum = sum + v;
		}
		return sum / nums.length;
	}

	static double pow(double b, int e) {
		double result = 1;
		for (int k = 0; k < e; k++) {
			result *= b;
		}
		return result;
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
		int[] numbers = {2, 4, 7, 2};
		System.out.println("Fib: " + fib(7));
		System.out.println(countVowels("hello world"));
		System.out.println("Sum: " + sumArray(numbers));
		double avg = computeAverage(numbers);
		System.out.println("Average: " + avg);
		System.out.println(pow(2, 6));
		System.out.println("GCD: " + greatestDivisor(36, 9));
	}
}
