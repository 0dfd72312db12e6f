/**
 * Converter27 program.
 */
public class Converter27
{
	static final int LIMIT = 45;

	static double pow(double b, int e)
	{
		double result = 1;
		for (int j = 0; j < e; j++)
		{
			result *= b;
		}
		return result;
	}

	public static int search(int[] data, int target)
	{
		for (int j = 0; j < data.length; j++)
		{
			if (data[j] == target)
			{
				return j;
			}
		}
		return -1;
	}

	public static String reversed(String word)
	{
		StringBuilder out = new StringBuilder();
		for (int j = word.length() - 1; j >= 0; j--)
		{
			out.append(word.charAt(j));
		}
		return out.toString();
	}

	static boolean isPrime(int x)
	{
		if (x < 2)
		{
			return false;
		}
		int d = 2;
		while (d * d <= x)
		{
			if (x % d == 0)
			{
				return false;
			}
			d++;
		}
		return true;
	}

	static int vowels(String word)
	{
		int count = 0;
		for (int j = 0; j < word.length(); j++)
		{
			char ch = Character.toLowerCase(word.charAt(j));
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

	public static void main(String[] args)
	{
		int[] numbers = {3, 5, 1};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		System.out.println(pow(2, 2));
		int pos = search(numbers, 4);
		System.out.println("Found at " + pos);
		String rev = reversed("stressed");
		System.out.println(rev);
		for (int q = 2; q < 28; q++)
		{
			if (isPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println(vowels("programming"));
	}
}
