// Lab assignment
public class Calculator114 {
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

	public static double celsiusToF(double degrees) {
		return degrees * 9 / 5 + 32;
	}

	public static void main(String[] args) {
		Point p = new Point(2, 3);
		System.out.println(p.distance());
		System.out.println(celsiusToF(3.0));
	}
}
