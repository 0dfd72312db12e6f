import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

/**
 * Counter134 program.
 */
public class Counter134
{
	static final int LIMIT = 86;

	public static int absolute(int n)
	{
		return n < 0 ? -n : n;
	}

	static void sortArray(int[] arr)
	{
		for (int j = 0; j < arr.length - 1; j++)
		{
			for (int m = 0; m < arr.length - 1 - j; m++)
			{
				if (arr[m] > arr[m + 1])
				{
					int temp = arr[m];
					arr[m] = arr[m + 1];
					arr[m + 1] = temp;
				}
			}
		}
	}

	static void countDown(int left)
	{
		do
		{
			System.out.println(left);
			left--;
			} while (left > 0);
			System.out.println("Go!");
		}

	static ArrayList<Integer> evens(int[] arr)
	{
		ArrayList<Integer> items = new ArrayList<>();
		for (int v : arr)
		{
			if (v % 2 == 0)
			{
				items.add(v);
			}
		}
		return items;
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
		int[] numbers = {7, 5, 7, 5, 8, 8, 9};
		for (int i = 0; i < LIMIT; i += 10)
		{
			System.out.println("Step " + i);
		}
		System.out.println(absolute(-34));
		sortArray(numbers);
		System.out.println(Arrays.toString(numbers));
		countDown(4);
		ArrayList<Integer> even = evens(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println("GCD: " + greatestDivisor(46, 57));
		System.out.println(pow(2, 5));
		sc.close();
	}
}
