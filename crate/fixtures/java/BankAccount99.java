import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

/**
 * BankAccount99 program.
 */
public class BankAccount99
{
  static final int LIMIT = 33;

  public static int digitSum(int n)
  {
    int sum = 0;
    while (n > 0)
    {
      sum += n % 10;
      n /= 10;
    }
    return sum;
  }

  public static int parseOrZero(String line)
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

  public static int sumArray(int[] nums)
  {
    int sum = 0;
    for (int j = 0; j < nums.length; j++)
    {
      sum += nums[j];
    }
    return sum;
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

  public static long fact(int n)
  {
    if (n <= 1)
    {
      return 1;
    }
    return n * fact(n - 1);
  }

  static ArrayList<Integer> evens(int[] nums)
  {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : nums)
    {
      if (v % 2 == 0)
      {
        result.add(v);
      }
    }
    return result;
  }

  public static double bodyMassIndex(double wgt, double hgt)
  {
    double value = wgt / Math.pow(hgt, 2);
    return Math.round(value * 10) / 10.0;
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

  public static double computeAverage(int[] nums)
  {
    double sum = 0;
    for (int v : nums)
    {
      sum = sum + v;
    }
    return sum / nums.length;
  }

  static void sortArray(int[] nums)
  {
    for (int j = 0; j < nums.length - 1; j++)
    {
      for (int m = 0; m < nums.length - 1 - j; m++)
      {
        if (nums[m] > nums[m + 1])
        {
          int tmp = nums[m];
          nums[m] = nums[m + 1];
          nums[m + 1] = tmp;
        }
      }
    }
  }

  static int findMax(int[] nums)
  {
    int max = nums[0];
    for (int j = 1; j < nums.length; j++)
    {
      if (nums[j] > max)
      {
        max = nums[j];
      }
    }
    return max;
  }

  public static void pattern(int height)
  {
    for (int row = 1; row <= height; row++)
    {
      for (int col = 0; col < row; col++)
      {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static boolean palindrome(String line)
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

  static int fibonacci(int n)
  {
    int a = 0;
    int b = 1;
    for (int j = 0; j < n; j++)
    {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  static boolean prime(int n)
  {
    if (n < 2)
    {
      return false;
    }
    int div = 2;
    while (div * div <= n)
    {
      if (n % div == 0)
      {
        return false;
      }
      div++;
    }
    return true;
  }

  public static int indexOf(int[] nums, int wanted)
  {
    for (int j = 0; j < nums.length; j++)
    {
      if (nums[j] == wanted)
      {
        return j;
      }
    }
    return -1;
  }

  public static double convert(double c)
  {
    return c * 9 / 5 + 32;
  }

  static boolean isEven(int n)
  {
    return n % 2 == 0;
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

  static int[] randomFill(int size)
  {
    Random rand = new Random(42);
    int[] nums = new int[size];
    for (int j = 0; j < size; j++)
    {
      nums[j] = rand.nextInt(100);
    }
    return nums;
  }

  static int countVowels(String line)
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

  public static String reversed(String line)
  {
    StringBuilder builder = new StringBuilder();
    for (int j = line.length() - 1; j >= 0; j--)
    {
      builder.append(line.charAt(j));
    }
    return builder.toString();
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

  public static int absolute(int n)
  {
    return n < 0 ? -n : n;
  }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {1, 4, 3, 9, 5, 7};
    for (int i = 0; i < LIMIT; i += 10)
    {
      System.out.println("Step " + i);
    }
    System.out.println("Digits: " + digitSum(39003));
    int parsed = parseOrZero(" 7 ");
    System.out.println(parsed);
    System.out.println("Sum: " + sumArray(numbers));
    countDown(4);
    System.out.println(fact(9));
    ArrayList<Integer> even = evens(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("BMI: " + bodyMassIndex(55.5, 1.59));
    System.out.println("Grade: " + grade(49));
    double avg = computeAverage(numbers);
    System.out.println("Average: " + avg);
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    pattern(4);
    System.out.println(palindrome("noon"));
    System.out.println("Fib: " + fibonacci(8));
    for (int q = 2; q < 20; q++)
    {
      if (prime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    int pos = indexOf(numbers, 3);
    System.out.println("Found at " + pos);
    System.out.println(convert(36.0));
    if (isEven(16))
    {
      System.out.println("even");
    }
    else
    {
      System.out.println("odd");
    }
    System.out.println(raise(2, 6));
    int[] random = randomFill(7);
    System.out.println(random.length);
    System.out.println(countVowels("hello world"));
    String rev = reversed("java");
    System.out.println(rev);
    System.out.println("GCD: " + greatestDivisor(82, 13));
    System.out.println(absolute(-16));
    sc.close();
  }
}
