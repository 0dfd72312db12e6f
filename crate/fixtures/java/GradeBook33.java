import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class GradeBook33
{
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

	static double raise(double base, int exp)
	{
		double result = 1;
		for (int j = 0; j < exp; j++)
		{
			result *= base;
		}
		return result;
	}

	static void countDown(int remaining)
	{
		do
		{
			System.out.println(remaining);
			remaining--;
			} while (remaining > 0);
			System.out.println("Go!");
		}

	public static double average(int[] data)
	{
		double result = 0;
		for (int v : data)
		{
			result = result + v;
		}
		return result / data.length;
	}

	public static void drawStars(int rows)
	{
		for (int row = 1; row <= rows; row++)
		{
			for (int col = 0; col < row; col++)
			{
				System.out.print("*");
			}
			System.out.println();
		}
	}

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

	public static int safeParse(String input)
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

	public static double celsiusToF(double degrees)
	{
		return degrees * 9 / 5 + 32;
	}

	static int[] fillRandom(int size)
	{
		Random rand = new Random(42);
		int[] data = new int[size];
		for (int j = 0; j < size; j++)
		{
			data[j] = rand.nextInt(100);
		}
		return data;
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

	public static double bodyMassIndex(double wgt, double hgt)
	{
		double value = wgt / Math.pow(hgt, 2);
		return Math.round(value * 10) / 10.0;
	}

	static boolean isPrime(int num)
	{
		if (num < 2)
		{
			return false;
		}
		int d = 2;
		while (d * d <= num)
		{
			if (num % d == 0)
			{
				return false;
			}
			d++;
		}
		return true;
	}

	public static long fact(int num)
	{
		if (num <= 1)
		{
			return 1;
		}
		return num * fact(num - 1);
	}

	public static int magnitude(int num)
	{
		return num < 0 ? -num : num;
	}

	static int fib(int num)
	{
		int first = 0;
		int second = 1;
		for (int j = 0; j < num; j++)
		{
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	static ArrayList<Integer> collectEven(int[] data)
	{
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : data)
		{
			if (v % 2 == 0)
			{
				items.add(v);
			}
		}
		return items;
	}

	static int findMax(int[] data)
	{
		int best = data[0];
		for (int j = 1; j < data.length; j++)
		{
			if (data[j] > best)
			{
				best = data[j];
			}
		}
		return best;
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

	static boolean even(int num)
	{
		return num % 2 == 0;
	}

	public static int digitSum(int num)
	{
		int result = 0;
		while (num > 0)
		{
			result += num % 10;
			num /= 10;
		}
		return result;
	}

	public static int addAll(int[] data)
	{
		int result = 0;
		for (int j = 0; j < data.length; j++)
		{
			result += data[j];
		}
		return result;
	}

	public static String reverse(String input)
	{
		StringBuilder builder = new StringBuilder();
		for (int j = input.length() - 1; j >= 0; j--)
		{
			builder.append(input.charAt(j));
		}
		return builder.toString();
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

	public static void main(String[] args)
	{
		int[] numbers = {3, 9, 2, 5};
		System.out.println("GCD: " + greatestDivisor(12, 44));
		System.out.println("Grade: " + toLetter(68));
		System.out.println(raise(2, 8));
		countDown(4);
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		drawStars(3);
		System.out.println(vowels("banana"));
		int parsed = safeParse(" 7 ");
		System.out.println(parsed);
		System.out.println(celsiusToF(30.0));
		int[] random = fillRandom(8);
		System.out.println(random.length);
		System.out.println(isPalindrome("hello"));
		System.out.println("BMI: " + bodyMassIndex(71.5, 1.73));
		for (int q = 2; q < 10; q++)
		{
			if (isPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		System.out.println(fact(11));
		System.out.println(magnitude(44));
		System.out.println("Fib: " + fib(14));
		ArrayList<Integer> even = collectEven(numbers);
		System.out.println(even.size() + " even numbers");
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		int pos = search(numbers, 4);
		System.out.println("Found at " + pos);
		if (even(12))
		{
			System.out.println("even");
		}
		else
		{
			System.out.println("odd");
		}
		System.out.println("Digits: " + digitSum(26370));
		System.out.println("Sum: " + addAll(numbers));
		String rev = reverse("level");
		System.out.println(rev);
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
	}
}
