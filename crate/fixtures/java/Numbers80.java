import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Numbers80
{
	static char letterGrade(int points)
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

	public static double celsiusToF(double celsius)
	{
		return celsius * 9 / 5 + 32;
	}

	static int fibonacci(int num)
	{
		int first = 0;
		int second = 1;
		for (int i = 0; i < num; i++)
		{
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	static void countdown(int left)
	{
		do
		{
			System.out.println(left);
			left--;
			} while (left > 0);
			System.out.println("Go!");
		}

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

	public static int search(int[] data, int key)
	{
		for (int i = 0; i < data.length; i++)
		{
			if (data[i] == key)
			{
				return i;
			}
		}
		return -1;
	}

	static void sortArray(int[] data)
	{
		for (int i = 0; i < data.length - 1; i++)
		{
			for (int m = 0; m < data.length - 1 - i; m++)
			{
				if (data[m] > data[m + 1])
				{
					int swap = data[m];
					data[m] = data[m + 1];
					data[m + 1] = swap;
				}
			}
		}
	}

	static boolean checkPrime(int num)
	{
		if (num < 2)
		{
			return false;
		}
		int div = 2;
		while (div * div <= num)
		{
			if (num % div == 0)
			{
				return false;
			}
			div++;
		}
		return true;
	}

	public static String reverse(String line)
	{
		StringBuilder builder = new StringBuilder();
		for (int i = line.length() - 1; i >= 0; i--)
		{
			builder.append(line.charAt(i));
		}
		return builder.toString();
	}

	public static void printTriangle(int size)
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

	static int countVowels(String line)
	{
		int count = 0;
		for (int i = 0; i < line.length(); i++)
		{
			char ch = Character.toLowerCase(line.charAt(i));
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

	static boolean even(int num)
	{
		return num % 2 == 0;
	}

	public static double mean(int[] data)
	{
		double total = 0;
		for (int v : data)
		{
			total = total + v;
		}
		return total / data.length;
	}

	public static int totalOf(int[] data)
	{
		int total = 0;
		for (int i = 0; i < data.length; i++)
		{
			total += data[i];
		}
		return total;
	}

	static ArrayList<Integer> filterEven(int[] data)
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

	static int gcd(int a, int b)
	{
		while (b != 0)
		{
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static boolean isPalindrome(String line)
	{
		int left = 0;
		int right = line.length() - 1;
		while (left < right)
		{
			if (line.charAt(left) != line.charAt(right))
			{
				return false;
			}
			left++;
			right--;
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

	static int findMax(int[] data)
	{
		int best = data[0];
		for (int i = 1; i < data.length; i++)
		{
			if (data[i] > best)
			{
				best = data[i];
			}
		}
		return best;
	}

	public static double computeBmi(double kg, double meters)
	{
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	public static int digitSum(int num)
	{
		int total = 0;
		while (num > 0)
		{
			total += num % 10;
			num /= 10;
		}
		return total;
	}

	static int[] fillRandom(int size)
	{
		Random rand = new Random(42);
		int[] data = new int[size];
		for (int i = 0; i < size; i++)
		{
			data[i] = rand.nextInt(100);
		}
		return data;
	}

	public static int magnitude(int num)
	{
		return num < 0 ? -num : num;
	}

	static double raise(double base, int exp)
	{
		double result = 1;
		for (int i = 0; i < exp; i++)
		{
			result *= base;
		}
		return result;
	}

	public static void main(String[] args)
	{
		int[] numbers = {8, 1, 7, 1, 3};
		System.out.println("Grade: " + letterGrade(73));
		System.out.println(celsiusToF(9.0));
		System.out.println("Fib: " + fibonacci(10));
		countdown(3);
		int parsed = safeParse(" 7 ");
		System.out.println(parsed);
		int pos = search(numbers, 6);
		System.out.println("Found at " + pos);
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		for (int q = 2; q < 16; q++)
		{
			if (checkPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		String rev = reverse("stressed");
		System.out.println(rev);
		printTriangle(3);
		System.out.println(countVowels("programming"));
		if (even(9))
		{
			System.out.println("even");
		}
		else
		{
			System.out.println("odd");
		}
		double avg = mean(numbers);
		System.out.println("Average: " + avg);
		System.out.println("Sum: " + totalOf(numbers));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println("GCD: " + gcd(66, 26));
		System.out.println(isPalindrome("hello"));
		System.out.println(fact(5));
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		System.out.println("BMI: " + computeBmi(57.5, 1.86));
		System.out.println("Digits: " + digitSum(25321));
		int[] random = fillRandom(4);
		System.out.println(random.length);
		System.out.println(magnitude(46));
		System.out.println(raise(2, 3));
	}
}
