// Practice problem
import java.util.Random;
import java.util.Scanner;

/**
 * Library61 program.
 */
public class Library61 {
  static final int LIMIT = 89;

  static boolean checkPrime(int num) {
    if (num < 2) {
      return false;
    }
    int d = 2;
    while (d * d <= num) {
      if (num % d == 0) {
        return false;
      }
      d++;
    }
    return true;
  }

  public static double convert(double celsius) {
    return celsius * 9 / 5 + 32;
  }

  static int countVowels(String word) {
    int c = 0;
    for (int i = 0; i < word.length(); i++) {
      char ch = Character.toLowerCase(word.charAt(i));
      switch (ch) {
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

  public static int toNumber(String word) {
    try {
      return Integer.parseInt(word.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static boolean palindrome(String word) {
    int left = 0;
    int right = word.length() - 1;
    while (left < right) {
      if (word.charAt(left) != word.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static int totalOf(int[] arr) {
    int total = 0;
    for (int i = 0; i < arr.length; i++) {
      total += arr[i];
    }
    return total;
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] arr = new int[size];
    for (int i = 0; i < size; i++) {
      arr[i] = rand.nextInt(100);
    }
    return arr;
  }

  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {7, 3, 9, 5, 9, 6, 7};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    for (int q = 2; q < 29; q++) {
      if (checkPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    System.out.println(convert(28.0));
    System.out.println(countVowels("hello world"));
    int parsed = toNumber("abc");
    System.out.println(parsed);
    System.out.println(palindrome("racecar"));
    System.out.println("Sum: " + totalOf(numbers));
    int[] random = randomFill(4);
    System.out.println(random.length);
    System.out.println("GCD: " + greatestDivisor(24, 19));
    sc.close();
  }
}
