import java.util.Random;

public class Primes132
{
	public static int totalOf(int[] nums)
	{
		int total = 0;
		for (int k = 0; k < nums.length; k++)
		{
			total += nums[k];
		}
		return total;
	}

	static int[] fillRandom(int size)
	{
		Random rand = new Random(42);
		int[] nums = new int[size];
		for (int k = 0; k < size; k++)
		{
			nums[k] = rand.nextInt(100);
		}
		return nums;
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

	public static void main(String[] args)
	{
		int[] numbers = {2, 1, 9, 9};
		System.out.println("Sum: " + totalOf(numbers));
		int[] random = fillRandom(4);
		System.out.println(random.length);
		System.out.println(palindrome("racecar"));
	}
}
