import java.util.ArrayList;
import java.util.Arrays;

public class Loops81 {
	static class Point {
		int x;
		int y;
		Point(int x, int y) {
			this.x = x;
			this.y = y;
		}
		double distance() {
			return Math.sqrt(x * x + y * y);
		}
	}

	static void sortArray(int[] arr) {
		for (int k = 0; k < arr.length - 1; k++) {
			for (int m = 0; m < arr.length - 1 - k; m++) {
				if (arr[m] > arr[m + 1]) {
					int tmp = arr[m];
					arr[m] = arr[m + 1];
					arr[m + 1] = tmp;
				}
			}
		}
	}

	static int findMax(int[] arr) {
		int biggest = arr[0];
		for (int k = 1; k < arr.length; k++) {
			if (arr[k] > biggest) {
				biggest = arr[k];
			}
		}
		return biggest;
	}

	public static double computeAverage(int[] arr) {
		double sum = 0;
		for (int v : arr) {
			sum = sum + v;
		}
		return sum / arr.length;
	}

	public static int addAll(int[] arr) {
		int sum = 0;
		for (int k = 0; k < arr.length; k++) {
			sum += arr[k];
		}
		return sum;
	}

	static ArrayList<Integer> evens(int[] arr) {
		ArrayList<Integer> list = new ArrayList<>();
		for (int v : arr) {
			if (v % 2 == 0) {
				list.add(v);
			}
		}
		return list;
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

	public static int parseOrZero(String line) {
		try {
			return Integer.parseInt(line.trim());
		} catch (NumberFormatException e) {
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	public static void main(String[] args) {
		int[] numbers = {8, 2, 9, 9, 4, 4, 9};
		Point p = new Point(3, 1);
		System.out.println(p.distance());
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		double avg = computeAverage(numbers);
		System.out.println("Average: " + avg);
		System.out.println("Sum: " + addAll(numbers));
		ArrayList<Integer> even = evens(numbers);
		System.out.println(even.size() + " even numbers");
		for (int q = 2; q < 23; q++) {
			if (isPrime(q)) {
				System.out.print(q + " ");
			}
		}
		System.out.println();
		int parsed = parseOrZero("42");
		System.out.println(parsed);
	}
}
