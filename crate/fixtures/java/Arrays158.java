import java.util.Arrays;
import java.util.Scanner;

public class Arrays158
{
  static final int LIMIT = 45;

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

  static void bubbleSort(int[] nums)
  {
    for (int j = 0; j < nums.length - 1; j++)
    {
      for (int m = 0; m < nums.length - 1 - j; m++)
      {
        if (nums[m] > nums[m + 1])
        {
          int temp = nums[m];
          nums[m] = nums[m + 1];
          nums[m + 1] = temp;
        }
      }
    }
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

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {7, 2, 1, 6};
    for (int i = 0; i < LIMIT; i += 10)
    {
      System.out.println("Step " + i);
    }
    System.out.println(vowels("banana"));
    bubbleSort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(isPalindrome("racecar"));
    sc.close();
  }
}
