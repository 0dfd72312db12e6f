public class Calculator136
{
	public static double convert(double celsius)
	{
		return celsius * 9 / 5 + 32;
	}

	public static void main(String[] args)
	{
		System.out.println(convert(27.0));
	}
}
