/**
 * Calculator7 program.
 */
public class Calculator7
{
	static void launch(int n)
	{
		do
		{
			System.out.println(n);
			n--;
			} while (n > 0);
			System.out.println("Go!");
		}

	public static String backwards(String text)
	{
		StringBuilder sb = new StringBuilder();
		for (int i = text.length() - 1; i >= 0; i--)
		{
			sb.append(text.charAt(i));
		}
		return sb.toString();
	}

	public static void drawStars(int size)
	{
		for (int row = 1; row <= size; row++)
		{
			for (int col = 0; col < row; col++)
			{
				System.out.print("*");
			}
			System.out.println();
		}
	}

	public static double toFahrenheit(double degrees)
	{
		return degrees * 9 / 5 + 32;
	}

	public static void main(String[] args)
	{
		launch(4);
		String rev = backwards("level");
		System.out.println(rev);
		drawStars(3);
		System.out.println(toFahrenheit(32.0));
	}
}
