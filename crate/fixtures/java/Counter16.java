import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

public class Counter16
{
	static final int LIMIT = 43;

	public static String backwards(String text)
	{
		StringBuilder builder = new StringBuilder();
		for (int i = text.length() - 1; i >= 0; i--)
		{
			builder.append(text.charAt(i));
		}
		return builder.toString();
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

	static int countVowels(String text)
	{
		int found = 0;
		for (int i = 0; i < text.length(); i++)
		{
			char ch = Character.toLowerCase(text.charAt(i));
			switch (ch)
			{
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				found++;
				break;
				default:
				break;
			}
		}
		return found;
	}

	public static boolean palindrome(String text)
	{
		int left = 0;
		int right = text.length() - 1;
		while (left < right)
		{
			if (text.charAt(left) != text.charAt(right))
			{
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	public static double average(int[] scores)
	{
		double sum = 0;
		for (int v : scores)
		{
			sum = sum + v;
		}
		return sum / scores.length;
	}

	static void bubbleSort(int[] scores)
	{
		for (int i = 0; i < scores.length - 1; i++)
		{
			for (int m = 0; m < scores.length - 1 - i; m++)
			{
				if (scores[m] > scores[m + 1])
				{
					int swap = scores[m];
					scores[m] = scores[m + 1];
					scores[m + 1] = swap;
				}
			}
		}
	}

	static ArrayList<Integer> filterEven(int[] scores)
	{
		ArrayList<Integer> list = new ArrayList<>();
		for (int v : scores)
		{
			if (v % 2 == 0)
			{
				list.add(v);
			}
		}
		return list;
	}

	public static double celsiusToF(double c)
	{
		return c * 9 / 5 + 32;
	}

	public static void main(String[] args)
	{
		Scanner sc = new Scanner(System.in);
		System.out.print("Enter a number: ");
		int input = sc.nextInt();
		System.out.println("You entered " + input);
		int[] numbers = {2, 6, 5, 8};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		String rev = backwards("stressed");
		System.out.println(rev);
		System.out.println("GCD: " + gcd(16, 37));
		System.out.println(countVowels("banana"));
		System.out.println(palindrome("racecar"));
		double avg = average(numbers);
		System.out.println("Average: " + avg);
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println(celsiusToF(17.0));
		sc.close();
	}
}
