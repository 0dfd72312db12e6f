/**
 * Lab58 program.
 */
public class Lab58 {
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

	public static long fact(int x) {
		if (x <= 1) {
			return 1;
		}
		return x * fact(x - 1);
	}

	static int maxValue(int[] arr) {
		int biggest = arr[0];
		for (int j = 1; j < arr.length; j++) {
			if (arr[j] > biggest) {
				biggest = arr[j];
			}
		}
		return biggest;
	}

	public static void main(String[] args) {
		int[] numbers = {6, 6, 8, 6};
		Point p = new Point(8, 3);
		System.out.println(p.distance());
		System.out.println(fact(10));
		int top = maxValue(numbers);
		System.out.println("Max is " + top);
	}
}
