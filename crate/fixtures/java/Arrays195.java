import java.util.Random;

/**
 * Arrays195 program.
 */
public class Arrays195
{
	static int vowels(String input)
	{
		int c = 0;
		for (int j = 0; j < input.length(); j++)
		{
			char ch = Character.toLowerCase(input.charAt(j));
			switch (ch)
			{
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				c++;
				break;
				default:
				break;
			}
		}
		return c;
	}

	public static int addAll(int[] values)
	{
		int result = 0;
		for (int j = 0; j < values.length; j++)
		{
			result += values[j];
		}
		return result;
	}

	public static boolean isPalindrome(String input)
	{
		int left = 0;
		int right = input.length() - 1;
		while (left < right)
		{
			if (input.charAt(left) != input.charAt(right))
			{
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	public static int find(int[] values, int key)
	{
		for (int j = 0; j < values.length; j++)
		{
			if (values[j] == key)
			{
				return j;
			}
		}
		return -1;
	}

	static int[] randomFill(int size)
	{
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int j = 0; j < size; j++)
		{
			values[j] = rand.nextInt(100);
		}
		return values;
	}

	public static String backwards(String input)
	{
		StringBuilder sb = new StringBuilder();
		for (int j = input.length() - 1; j >= 0; j--)
		{
			sb.append(input.charAt(j));
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

	public static int parseOrZero(String input)
	{
		try
		{
			return Integer.parseInt(input.trim());
		}
		catch (NumberFormatException e)
		{
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	public static void main(String[] args)
	{
		int[] numbers = {2, 5, 4, 2};
		System.out.println(vowels("banana"));
		System.out.println("Sum: " + addAll(numbers));
		System.out.println(isPalindrome("noon"));
		int pos = find(numbers, 8);
		System.out.println("Found at " + pos);
		int[] random = randomFill(5);
		System.out.println(random.length);
		String rev = backwards("java");
		System.out.println(rev);
		drawStars(5);
		int parsed = parseOrZero(" 7 ");
		System.out.println(parsed);
	}
}
