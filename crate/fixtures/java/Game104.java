// Practice problem
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Game104 {
  public static long fact(int num) {
    if (num <= 1) {
      return 1;
    }
    return num * fact(num - 1);
  }

  static int largest(int[] values) {
    int max = values[0];
    for (int k = 1; k < values.length; k++) {
      if (values[k] > max) {
        max = values[k];
      }
    }
    return max;
  }

  public static int sumDigits(int num) {
    int acc = 0;
    while (num > 0) {
      acc += num % 10;
      num /= 10;
    }
    return acc;
  }

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static int parseOrZero(String word) {
    try {
      return Integer.parseInt(word.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static ArrayList<Integer> collectEven(int[] values) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : values) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int k = 0; k < size; k++) {
      values[k] = rand.nextInt(100);
    }
    return values;
  }

  static boolean isPrime(int num) {
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

  public static double celsiusToF(double celsius) {
    return celsius * 9 / 5 + 32;
  }

  static void countDown(int left) {
    do {
      System.out.println(left);
      left--;
      } while (left > 0);
      System.out.println("Go!");
    }

  public static String reverse(String word) {
    StringBuilder out = new StringBuilder();
    for (int k = word.length() - 1; k >= 0; k--) {
      out.append(word.charAt(k));
    }
    return out.toString();
  }

  static char letterGrade(int mark) {
    if (mark >= 90) {
      return 'A';
    } else if (mark >= 80) {
      return 'B';
    } else if (mark >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  public static boolean isPalindrome(String word) {
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

  public static double computeBmi(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static void pattern(int size) {
    for (int row = 1; row <= size; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static boolean isEven(int num) {
    return num % 2 == 0;
  }

  static void bubbleSort(int[] values) {
    for (int k = 0; k < values.length - 1; k++) {
      for (int m = 0; m < values.length - 1 - k; m++) {
        if (values[m] > values[m + 1]) {
          int swap = values[m];
          values[m] = values[m + 1];
          values[m + 1] = swap;
        }
      }
    }
  }

  static int vowels(String word) {
    int found = 0;
    for (int k = 0; k < word.length(); k++) {
      char ch = Character.toLowerCase(word.charAt(k));
      switch (ch) {
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

  public static double average(int[] values) {
    double acc = 0;
    for (int v : values) {
      acc = acc + v;
    }
    return acc / values.length;
  }

  public static int totalOf(int[] values) {
    int acc = 0;
    for (int k = 0; k < values.length; k++) {
      acc += values[k];
    }
    return acc;
  }

  static int fibonacci(int num) {
    int first = 0;
    int second = 1;
    for (int k = 0; k < num; k++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  public static int magnitude(int num) {
    return num < 0 ? -num : num;
  }

  public static int find(int[] values, int key) {
    for (int k = 0; k < values.length; k++) {
      if (values[k] == key) {
        return k;
      }
    }
    return -1;
  }

  static double power(double b, int e) {
    double result = 1;
    for (int k = 0; k < e; k++) {
      result *= b;
    }
    return result;
  }

  public static void main(String[] args) {
    int[] numbers = {9, 3, 1, 4, 7, 9, 1};
    System.out.println(fact(10));
    int top = largest(numbers);
    System.out.println("Max is " + top);
    System.out.println("Digits: " + sumDigits(38031));
    System.out.println("GCD: " + gcd(52, 57));
    int parsed = parseOrZero("42");
    System.out.println(parsed);
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    int[] random = randomFill(5);
    System.out.println(random.length);
    for (int q = 2; q < 33; q++) {
      if (isPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    System.out.println(celsiusToF(-3.0));
    countDown(4);
    String rev = reverse("java");
    System.out.println(rev);
    System.out.println("Grade: " + letterGrade(83));
    System.out.println(isPalindrome("hello"));
    System.out.println("BMI: " + computeBmi(72.5, 1.84));
    pattern(3);
    if (isEven(9)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    bubbleSort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(vowels("hello world"));
    double avg = average(numbers);
    System.out.println("Average: " + avg);
    System.out.println("Sum: " + totalOf(numbers));
    System.out.println("Fib: " + fibonacci(17));
    System.out.println(magnitude(-44));
    int pos = find(numbers, 7);
    System.out.println("Found at " + pos);
    System.out.println(power(2, 2));
  }
}
