import java.util.Scanner;

public class Exercise103
{
	static final int LIMIT = 80;

	public static int safeParse(String line)
	{
		try
		{
			return Integer.parseInt(line.trim());
		}
		catch (NumberFormatException e)
		{
			System.out.println("Not a number: " + e.getMessage());
			return 0;
		}
	}

	public static int totalOf(int[] scores)
	{
		int acc = 0;
		for (int k = 0; k < scores.length; k++)
		{
			acc += scores[k];
		}
		return acc;
	}

	static char grade(int points)
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

	static boolean isPrime(int x)
	{
		if (x < 2)
		{
			return false;
		}
		int factor = 2;
		while (factor * factor <= x)
		{
			if (x % factor == 0)
			{
				return false;
			}
			factor++;
		}
		return true;
	}

	public static int find(int[] scores, int target)
	{
		for (int k = 0; k < scores.length; k++)
		{
			if (scores[k] == target)
			{
				return k;
			}
		}
		return -1;
	}

	public static void main(String[] args)
	{
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {1, 7, 7};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		int parsed = safeParse("42");
		System.out.println(parsed);
		System.out.println("Sum: " + totalOf(numbers));
		System.out.println("Grade: " + grade(72));
		for (int q = 2; q < 14; q++)
		{
			if (isPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		int pos = find(numbers, 1);
		System.out.println("Found at " + pos);
		sc.close();
	}
}
