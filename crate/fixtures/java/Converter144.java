import java.util.Arrays;
import java.util.Scanner;

public class Converter144
{
	static final int LIMIT = 4;

	static double power(double b, int e)
	{
		double result = 1;
		for (int j = 0; j < e; j++)
		{
			result *= b;
		}
		return result;
	}

	public static double toFahrenheit(double c)
	{
		return c * 9 / 5 + 32;
	}

	public static int abs(int x)
	{
		return x < 0 ? -x : x;
	}

	static void sortArray(int[] data)
	{
		for (int j = 0; j < data.length - 1; j++)
		{
			for (int m = 0; m < data.length - 1 - j; m++)
			{
				if (data[m] > data[m + 1])
				{
					int tmp = data[m];
					data[m] = data[m + 1];
					data[m + 1] = tmp;
				}
			}
		}
	}

	static int vowels(String line)
	{
		int count = 0;
		for (int j = 0; j < line.length(); j++)
		{
			char ch = Character.toLowerCase(line.charAt(j));
			switch (ch)
			{
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				count++;
				break;
				default:
				break;
			}
		}
		return count;
	}

	public static long fact(int x)
	{
		if (x <= 1)
		{
			return 1;
		}
		return x * fact(x - 1);
	}

	public static int find(int[] data, int wanted)
	{
		for (int j = 0; j < data.length; j++)
		{
			if (data[j] == wanted)
			{
				return j;
			}
		}
		return -1;
	}

	static char toLetter(int points)
	{
		if (points >= 90)
		{
			return 'A';
		}
		else if (points >= 80)
		{
			return 'B';
		}
		else if (points >= 70)
		{
			return 'C';
		}
		else
		{
			return 'F';
		}
	}

	static int fib(int x)
	{
		int a = 0;
		int b = 1;
		for (int j = 0; j < x; j++)
		{
			int next = a + b;
			a = b;
			b = next;
		}
		return a;
	}

	public static void main(String[] args)
	{
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {4, 7, 4, 5};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		System.out.println(power(2, 5));
		System.out.println(toFahrenheit(-6.0));
		System.out.println(abs(-28));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println(vowels("programming"));
		System.out.println(fact(10));
		int pos = find(numbers, 4);
		System.out.println("Found at " + pos);
		System.out.println("Grade: " + toLetter(48));
		System.out.println("Fib: " + fib(5));
		sc.close();
	}
}
