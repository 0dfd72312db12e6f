// Homework
public class Converter19
{
	static final int LIMIT = 69;

	static class Point
	{
		int x;
		int y;
		Point(int x, int y)
		{
			this.x = x;
			this.y = y;
		}
		double distance()
		{
			return Math.sqrt(x * x + y * y);
		}
	}

	public static void main(String[] args)
	{
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		Point p = new Point(5, 8);
		System.out.println(p.distance());
	}
}
