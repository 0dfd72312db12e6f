import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

public class GradeBook83
{
	public static double celsiusToF(double celsius)
	{
		return celsius * 9 / 5 + 32;
	}

	public static int sumArray(int[] scores)
	{
		int result = 0;
		for (int j = 0; j < scores.length; j++)
		{
			result += scores[j];
		}
		return result;
	}

	static int findMax(int[] scores)
	{
		int biggest = scores[0];
		for (int j = 1; j < scores.length; j++)
		{
			if (scores[j] > biggest)
			{
				biggest = scores[j];
			}
		}
		return biggest;
	}

	static boolean isEven(int num)
	{
		return num % 2 == 0;
	}

	public static int absolute(int num)
	{
		return num < 0 ? -num : num;
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

	static void countdown(int n)
	{
		do
		{
			System.out.println(n);
			n--;
			} while (n > 0);
			System.out.println("Go!");
		}

	public static int find(int[] scores, int target)
	{
		for (int j = 0; j < scores.length; j++)
		{
			if (scores[j] == target)
			{
				return j;
			}
		}
		return -1;
	}

	static void sort(int[] scores)
	{
		for (int j = 0; j < scores.length - 1; j++)
		{
			for (int m = 0; m < scores.length - 1 - j; m++)
			{
				if (scores[m] > scores[m + 1])
				{
					int tmp = scores[m];
					scores[m] = scores[m + 1];
					scores[m + 1] = tmp;
				}
			}
		}
	}

	public static double average(int[] scores)
	{
		double result = 0;
		for (int v : scores)
		{
			result = result + v;
		}
		return result / scores.length;
	}

	static int fib(int num)
	{
		int prev = 0;
		int curr = 1;
		for (int j = 0; j < num; j++)
		{
			int next = prev + curr;
			prev = curr;
			curr = next;
		}
		return prev;
	}

	static ArrayList<Integer> collectEven(int[] scores)
	{
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : scores)
		{
			if (v % 2 == 0)
			{
				items.add(v);
			}
		}
		return items;
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

	public static long factorial(int num)
	{
		if (num <= 1)
		{
			return 1;
		}
		return num * factorial(num - 1);
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

	static int[] randomFill(int size)
	{
		Random rand = new Random(42);
		int[] scores = new int[size];
		for (int j = 0; j < size; j++)
		{
			scores[j] = rand.nextInt(100);
		}
		return scores;
	}

	static char letterGrade(int score)
	{
		if (score >= 90)
		{
			return 'A';
		}
		else if (score >= 80)
		{
			return 'B';
		}
		else if (score >= 70)
		{
			return 'C';
		}
		else
		{
			return 'F';
		}
	}

	public static String reverse(String line)
	{
		StringBuilder builder = new StringBuilder();
		for (int j = line.length() - 1; j >= 0; j--)
		{
			builder.append(line.charAt(j));
		}
		return builder.toString();
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

	public static double bmi(double kg, double meters)
	{
		double value = kg / Math.pow(meters, 2);
		return Math.round(value * 10) / 10.0;
	}

	static double pow(double x, int n)
	{
		double result = 1;
		for (int j = 0; j < n; j++)
		{
			result *= x;
		}
		return result;
	}

	public static void main(String[] args)
	{
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {1, 9, 5, 3};
		System.out.println(celsiusToF(-4.0));
		System.out.println("Sum: " + sumArray(numbers));
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		if (isEven(9))
		{
			System.out.println("even");
		}
		else
		{
			System.out.println("odd");
		}
		System.out.println(absolute(22));
		for (int q = 2; q < 39; q++)
		{
			if (isPrime(q))
			{
				System.out.print(q + " ");
			}
		}
		System.out.println();
		countdown(3);
		int pos = find(numbers, 8);
		System.out.println("Found at " + pos);
		sort(numbers);
		System.out.println(Arrays.toString(numbers));
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		System.out.println("Fib: " + fib(17));
		ArrayList<Integer> even = collectEven(numbers);
		System.out.println(even.size() + " even numbers");
		int parsed = safeParse("42");
		System.out.println(parsed);
		System.out.println(isPalindrome("noon"));
		System.out.println(vowels("programming"));
		System.out.println(factorial(5));
		System.out.println("GCD: " + gcd(84, 37));
		int[] random = randomFill(4);
		System.out.println(random.length);
		System.out.println("Grade: " + letterGrade(49));
		String rev = reverse("level");
		System.out.println(rev);
		System.out.println("Digits: " + digitSum(48908));
		printTriangle(6);
		System.out.println("BMI: " + bmi(58.5, 1.83));
		System.out.println(pow(2, 5));
		sc.close();
	}
}
