import java.util.Arrays;

/**
 * Quiz0 program.
 */
public class Quiz0 {
	public static int abs(int x) {
		return x < 0 ? -x : x;
	}

	public static int sumArray(int[] arr) {
		int sum = 0;
		for (int idx = 0; idx < arr.length; idx++) {
			sum += arr[idx];
		}
		return sum;
	}

	static void sort(int[] arr) {
		for (int idx = 0; idx < arr.length - 1; idx++) {
			for (int m = 0; m < arr.length - 1 - idx; m++) {
				if (arr[m] > arr[m + 1]) {
					int tmp = arr[m];
					arr[m] = arr[m + 1];
					arr[m + 1] = tmp;
				}
			}
		}
	}

	static boolean isEven(int x) {
		return x % 2 == 0;
	}

	static int largest(int[] arr) {
		int biggest = arr[0];
		for (int idx = 1; idx < arr.length; idx++) {
			if (arr[idx] > biggest) {
				biggest = arr[idx];
			}
		}
		return biggest;
	}

	public static void main(String[] args) {
		int[] numbers = {8, 8, 6, 8, 9, 3, 1};
		System.out.println(abs(32));
		System.out.println("Sum: " + sumArray(numbers));
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		if (isEven(17)) {
			System.out.println("even");
		} else {
			System.out.println("odd");
		}
		int top = largest(numbers);
		System.out.println("Max is " + top);
	}
}
