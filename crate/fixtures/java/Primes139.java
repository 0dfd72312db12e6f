// Practice problem
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Primes139
{
  public static int totalOf(int[] arr)
  {
    int acc = 0;
    for (int i = 0; i < arr.length; i++)
    {
      acc += arr[i];
    }
    return acc;
  }

  public static int indexOf(int[] arr, int target)
  {
    for (int i = 0; i < arr.length; i++)
    {
      if (arr[i] == target)
      {
        return i;
      }
    }
    return -1;
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

  static ArrayList<Integer> filterEven(int[] arr)
  {
    ArrayList<Integer> list = new ArrayList<>();
    for (int v : arr)
    {
      if (v % 2 == 0)
      {
        list.add(v);
      }
    }
    return list;
  }

  public static int abs(int x)
  {
    return x < 0 ? -x : x;
  }

  public static int parseOrZero(String input)
  {
    try
    {
      return Integer.parseInt(input.trim());
    }
    catch (NumberFormatException e)
    {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static String reverse(String input)
  {
    StringBuilder builder = new StringBuilder();
    for (int i = input.length() - 1; i >= 0; i--)
    {
      builder.append(input.charAt(i));
    }
    return builder.toString();
  }

  static int largest(int[] arr)
  {
    int biggest = arr[0];
    for (int i = 1; i < arr.length; i++)
    {
      if (arr[i] > biggest)
      {
        biggest = arr[i];
      }
    }
    return biggest;
  }

  static void sort(int[] arr)
  {
    for (int i = 0; i < arr.length - 1; i++)
    {
      for (int m = 0; m < arr.length - 1 - i; m++)
      {
        if (arr[m] > arr[m + 1])
        {
          int tmp = arr[m];
          arr[m] = arr[m + 1];
          arr[m + 1] = tmp;
        }
      }
    }
  }

  public static void printTriangle(int height)
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

  public static double bodyMassIndex(double kg, double meters)
  {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
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

  static boolean prime(int x)
  {
    if (x < 2)
    {
      return false;
    }
    int factor = 2;
    while (factor * factor <= x)
    {
      if (x % factor == 0)
      {
        return false;
      }
      factor++;
    }
    return true;
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

  static int fibonacci(int x)
  {
    int prev = 0;
    int curr = 1;
    for (int i = 0; i < x; i++)
    {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  public static int sumDigits(int x)
  {
    int acc = 0;
    while (x > 0)
    {
      acc += x % 10;
      x /= 10;
    }
    return acc;
  }

  public static double mean(int[] arr)
  {
    double acc = 0;
    for (int v : arr)
    {
      acc = acc + v;
    }
    return acc / arr.length;
  }

  static int[] fillRandom(int size)
  {
    Random rand = new Random(42);
    int[] arr = new int[size];
    for (int i = 0; i < size; i++)
    {
      arr[i] = rand.nextInt(100);
    }
    return arr;
  }

  public static long fact(int x)
  {
    if (x <= 1)
    {
      return 1;
    }
    return x * fact(x - 1);
  }

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

  static boolean isEven(int x)
  {
    return x % 2 == 0;
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

  static double raise(double b, int e)
  {
    double result = 1;
    for (int i = 0; i < e; i++)
    {
      result *= b;
    }
    return result;
  }

  public static double convert(double celsius)
  {
    return celsius * 9 / 5 + 32;
  }

  public static void main(String[] args)
  {
    int[] numbers = {5, 4, 1, 7, 6, 8};
    System.out.println("Sum: " + totalOf(numbers));
    int pos = indexOf(numbers, 9);
    System.out.println("Found at " + pos);
    System.out.println("GCD: " + gcd(12, 31));
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(abs(-19));
    int parsed = parseOrZero("abc");
    System.out.println(parsed);
    String rev = reverse("level");
    System.out.println(rev);
    int top = largest(numbers);
    System.out.println("Max is " + top);
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    printTriangle(5);
    System.out.println("BMI: " + bodyMassIndex(80.5, 1.70));
    System.out.println(countVowels("programming"));
    for (int q = 2; q < 30; q++)
    {
      if (prime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    countDown(5);
    System.out.println("Fib: " + fibonacci(8));
    System.out.println("Digits: " + sumDigits(43096));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
    int[] random = fillRandom(8);
    System.out.println(random.length);
    System.out.println(fact(10));
    System.out.println("Grade: " + letterGrade(81));
    if (isEven(26))
    {
      System.out.println("even");
    }
    else
    {
      System.out.println("odd");
    }
    System.out.println(isPalindrome("noon"));
    System.out.println(raise(2, 2));
    System.out.println(convert(37.0));
  }
}
