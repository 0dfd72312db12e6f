// Lab assignment
import java.util.ArrayList;
import java.util.Arrays;

public class Arrays118
{
	public static long fact(int n)
	{
		if (n <= 1)
		{
			return 1;
		}
		return n * fact(n - 1);
	}

	public static int digitSum(int n)
	{
		int acc = 0;
		while (n > 0)
		{
			acc += n % 10;
			n /= 10;
		}
		return acc;
	}

	static void bubbleSort(int[] values)
	{
		for (int k = 0; k < values.length - 1; k++)
		{
			for (int m = 0; m < values.length - 1 - k; m++)
			{
				if (values[m] > values[m + 1])
				{
					int temp = values[m];
					values[m] = values[m + 1];
					values[m + 1] = temp;
				}
			}
		}
	}

	static int fib(int n)
	{
		int first = 0;
		int second = 1;
		for (int k = 0; k < n; k++)
		{
			int next = first + second;
			first = second;
			second = next;
		}
		return first;
	}

	static ArrayList<Integer> evens(int[] values)
	{
		ArrayList<Integer> list = new ArrayList<>();
		for (int v : values)
		{
			if (v % 2 == 0)
			{
				list.add(v);
			}
		}
		return list;
	}

	public static double convert(double c)
	{
		return c * 9 / 5 + 32;
	}

	public static int sumArray(int[] values)
	{
		int acc = 0;
		for (int k = 0; k < values.length; k++)
		{
			acc += values[k];
		}
		return acc;
	}

	public static String reverse(String word)
	{
		StringBuilder builder = new StringBuilder();
		for (int k = word.length() - 1; k >= 0; k--)
		{
			builder.append(word.charAt(k));
		}
		return builder.toString();
	}

	public static boolean isPalindrome(String word)
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

	static char grade(int mark)
	{
		if (mark >= 90)
		{
			return 'A';
		}
		else if (mark >= 80)
		{
			return 'B';
		}
		else if (mark >= 70)
		{
			return 'C';
		}
		else
		{
			return 'F';
		}
	}

	public static void main(String[] args)
	{
		int[] numbers = {1, 6, 9};
		System.out.println(fact(10));
		System.out.println("Digits: " + digitSum(60466));
		bubbleSort(numbers);
		System.out.println(Arrays.toString(numbers));
		System.out.println("Fib: " + fib(16));
		ArrayList<Integer> even = evens(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println(convert(3.0));
		System.out.println("Sum: " + sumArray(numbers));
		String rev = reverse("java");
		System.out.println(rev);
		System.out.println(isPalindrome("racecar"));
		System.out.println("Grade: " + grade(47));
	}
}
