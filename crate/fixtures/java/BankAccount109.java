import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

/**
 * BankAccount109 program.
 */
public class BankAccount109
{
  static int[] fillRandom(int size)
  {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int k = 0; k < size; k++)
    {
      values[k] = rand.nextInt(100);
    }
    return values;
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

  public static int abs(int x)
  {
    return x < 0 ? -x : x;
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

  static boolean checkPrime(int x)
  {
    if (x < 2)
    {
      return false;
    }
    int div = 2;
    while (div * div <= x)
    {
      if (x % div == 0)
      {
        return false;
      }
      div++;
    }
    return true;
  }

  static double raise(double base, int exp)
  {
    double result = 1;
    for (int k = 0; k < exp; k++)
    {
      result *= base;
    }
    return result;
  }

  static int vowels(String input)
  {
    int found = 0;
    for (int k = 0; k < input.length(); k++)
    {
      char ch = Character.toLowerCase(input.charAt(k));
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

  public static void drawStars(int size)
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

  static void sortArray(int[] values)
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

  static char letterGrade(int mark)
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
    int[] numbers = {3, 3, 8, 2, 7, 9, 3};
    int[] random = fillRandom(8);
    System.out.println(random.length);
    System.out.println(isPalindrome("hello"));
    System.out.println(abs(-27));
    ArrayList<Integer> even = evens(numbers);
    System.out.println(even.size() + " even numbers");
    for (int q = 2; q < 35; q++)
    {
      if (checkPrime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    System.out.println(raise(2, 10));
    System.out.println(vowels("hello world"));
    drawStars(5);
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("Grade: " + letterGrade(55));
  }
}
