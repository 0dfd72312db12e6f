import java.util.Scanner;

/**
 * Primes1 program.
 */
public class Primes1
{
  public static double convert(double degrees)
  {
    return degrees * 9 / 5 + 32;
  }

  public static int indexOf(int[] nums, int target)
  {
    for (int i = 0; i < nums.length; i++)
    {
      if (nums[i] == target)
      {
        return i;
      }
    }
    return -1;
  }

  static double raise(double x, int n)
  {
    double result = 1;
    for (int i = 0; i < n; i++)
    {
      result *= x;
    }
    return result;
  }

  static int countVowels(String input)
  {
    int c = 0;
    for (int i = 0; i < input.length(); i++)
    {
      char ch = Character.toLowerCase(input.charAt(i));
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

  static int findMax(int[] nums)
  {
    int biggest = nums[0];
    for (int i = 1; i < nums.length; i++)
    {
      if (nums[i] > biggest)
      {
        biggest = nums[i];
      }
    }
    return biggest;
  }

  static void launch(int remaining)
  {
    do
    {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {1, 1, 4, 5, 8, 1};
    System.out.println(convert(6.0));
    int pos = indexOf(numbers, 8);
    System.out.println("Found at " + pos);
    System.out.println(raise(2, 7));
    System.out.println(countVowels("hello world"));
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    launch(3);
    sc.close();
  }
}
