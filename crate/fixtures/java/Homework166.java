public class Homework166 {
	static final int LIMIT = 90;

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

	public static int addAll(int[] arr) {
		int acc = 0;
		for (int j = 0; j < arr.length; j++) {
			acc += arr[j];
		}
		return acc;
	}

	public static void main(String[] args) {
		int[] numbers = {2, 2, 7, 9, 4};
		for (int i = 0; i < LIMIT; i += 10) {
			System.out.println("Step " + i);
		}
		Point p = new Point(8, 8);
		System.out.println(p.distance());
		System.out.println("Sum: " + addAll(numbers));
	}
}
