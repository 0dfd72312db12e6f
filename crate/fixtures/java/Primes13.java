import java.util.Arrays;
import java.util.Random;

/**
 * Primes13 program.
 */
public class Primes13
{
	static final int LIMIT = 30;

	static boolean even(int n)
	{
		return n % 2 == 0;
	}

	public static void pattern(int size)
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

	public static double bmi(double kg, double meters)
	{
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static int search(int[] values, int target)
	{
		for (int idx = 0; idx < values.length; idx++)
		{
			if (values[idx] == target)
			{
				return idx;
			}
		}
		return -1;
	}

	static int greatestDivisor(int a, int b)
	{
		while (b != 0)
		{
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	static void sortArray(int[] values)
	{
		for (int idx = 0; idx < values.length - 1; idx++)
		{
			for (int m = 0; m < values.length - 1 - idx; m++)
			{
				if (values[m] > values[m + 1])
				{
					int swap = values[m];
					values[m] = values[m + 1];
					values[m + 1] = swap;
				}
			}
		}
	}

	static boolean isPrime(int n)
	{
		if (n < 2)
		{
			return false;
		}
		int factor = 2;
		while (factor * factor <= n)
		{
			if (n % factor == 0)
			{
				return false;
			}
			factor++;
		}
		return true;
	}

	public static double computeAverage(int[] values)
	{
		double sum = 0;
		for (int v : values)
		{
			sum = sum + v;
		}
		return sum / values.length;
	}

	public static boolean palindrome(String word)
	{
		int left = 0;
		int right = word.length() - 1;
		while (left < right)
		{
			if (word.charAt(left) != word.charAt(right))
			{
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static int[] randomFill(int size)
	{
		Random rand = new Random(42);
		int[] values = new int[size];
		for (int idx = 0; idx < size; idx++)
		{
			values[idx] = rand.nextInt(100);
		}
		return values;
	}

	public static void main(String[] args)
	{
		int[] numbers = {9, 9, 7, 3};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		if (even(3))
		{
			System.out.println("even");
		}
		else
		{
			System.out.println("odd");
		}
		pattern(5);
		System.out.println("BMI: " + bmi(56.5, 1.87));
		int pos = search(numbers, 5);
		System.out.println("Found at " + pos);
		System.out.println("GCD: " + greatestDivisor(65, 53));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		for (int q = 2; q < 26; q++)
		{
			if (isPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		double avg = computeAverage(numbers);
		System.out.println("Average: " + avg);
		System.out.println(palindrome("noon"));
		int[] random = randomFill(5);
		System.out.println(random.length);
	}
}
